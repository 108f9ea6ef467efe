#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "cyclecert/experiment.hpp"
#include "cyclecert/parallel.hpp"

namespace {

using namespace cyclecert;

std::vector<std::uint32_t> default_n_values(ExperimentKind kind) {
    switch (kind) {
        case ExperimentKind::simulate_q: {
            std::vector<std::uint32_t> out;
            for (std::uint32_t n = 16; n <= 16384; n *= 2) out.push_back(n);
            return out;
        }
        case ExperimentKind::exact_q_kind: return {3, 4, 5, 6, 7, 8, 9, 10};
        case ExperimentKind::poisson_p: return {4096};
        case ExperimentKind::eta_fit: {
            std::vector<std::uint32_t> out;
            for (std::uint32_t n = 256; n <= 32768; n *= 2) out.push_back(n);
            return out;
        }
        case ExperimentKind::tails: return {1000, 10000};
        case ExperimentKind::gf_check: return {200};
        case ExperimentKind::tv_dist: return {6, 12, 20};
        case ExperimentKind::fourfold: return {10000};
        case ExperimentKind::galois: return {};
    }
    return {};
}

std::uint64_t default_trials(ExperimentKind kind) {
    switch (kind) {
        case ExperimentKind::simulate_q: return 10000;
        case ExperimentKind::poisson_p: return 100000;
        case ExperimentKind::eta_fit: return 100000;
        case ExperimentKind::tails: return 1000000;
        case ExperimentKind::fourfold: return 10000;
        default: return 10000;
    }
}

int default_threads() {
    if (const char* env = std::getenv("CYCLECERT_THREADS")) {
        const int v = std::atoi(env);
        if (v >= 1) return v;
    }
    return hardware_threads();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Monte Carlo certificates for invariable generation, Poisson sumset "
                 "statistics, and full-Galois-group screening"};
    app.require_subcommand(1);

    ExperimentConfig config;
    config.threads = default_threads();
    std::string n_list, prime_range, out_path, format;
    bool assert_checks = false;
    bool n_given = false, trials_given = false;

    for (ExperimentKind kind :
         {ExperimentKind::simulate_q, ExperimentKind::poisson_p, ExperimentKind::eta_fit,
          ExperimentKind::tails, ExperimentKind::gf_check, ExperimentKind::tv_dist,
          ExperimentKind::exact_q_kind, ExperimentKind::fourfold, ExperimentKind::galois}) {
        CLI::App* sub = app.add_subcommand(to_string(kind));
        sub->add_option("--n", config.n_values, "parameter n (repeatable)")
            ->each([&](const std::string&) { n_given = true; });
        sub->add_option("--n-list", n_list, "comma-separated list of n values");
        sub->add_option("--r,--r-max", config.r, "number of draws r (or sweep maximum)");
        sub->add_option("--trials", config.trials, "Monte Carlo trials per point")
            ->each([&](const std::string&) { trials_given = true; });
        sub->add_option("--eps", config.eps, "epsilon for the typicality thresholds");
        sub->add_option("--x", config.x, "tilt parameter for the sharp-rate run");
        sub->add_option("--L", config.cutoff, "intersection cutoff");
        sub->add_option("--m", config.m, "marginal window for tv-dist");
        sub->add_option("--prime-range", prime_range, "prime sampling range lo:hi");
        sub->add_option("--poly", config.polynomial,
                        "polynomial (surface syntax or JSON coefficient array)");
        sub->add_option("--seed", config.seed, "master seed");
        sub->add_option("--threads", config.threads, "worker threads")
            ->envname("CYCLECERT_THREADS");
        sub->add_option("--out", out_path, "output path (default: stdout)");
        sub->add_option("--format", format, "csv or json")
            ->check(CLI::IsMember({"csv", "json"}));
        sub->add_flag("--assert", assert_checks, "exit 3 when any emitted check fails");
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    const std::string sub_name = app.get_subcommands().front()->get_name();
    const auto kind = experiment_from_string(sub_name);
    if (!kind) {
        std::cerr << "unknown experiment: " << sub_name << "\n";
        return 2;
    }
    config.experiment = *kind;
    // the screen's native output is the full verdict object
    if (format.empty()) format = (config.experiment == ExperimentKind::galois) ? "json" : "csv";

    try {
        if (!n_list.empty()) {
            std::stringstream ss(n_list);
            std::string item;
            config.n_values.clear();
            while (std::getline(ss, item, ','))
                config.n_values.push_back(static_cast<std::uint32_t>(std::stoul(item)));
            n_given = true;
        }
        if (!n_given) config.n_values = default_n_values(config.experiment);
        if (!trials_given) config.trials = default_trials(config.experiment);
        if (!prime_range.empty()) {
            const auto colon = prime_range.find(':');
            if (colon == std::string::npos)
                throw std::invalid_argument("--prime-range must be lo:hi");
            config.prime_lo = std::stoull(prime_range.substr(0, colon));
            config.prime_hi = std::stoull(prime_range.substr(colon + 1));
        }
        validate_config(config);
    } catch (const std::exception& e) {
        std::cerr << "invalid config: " << e.what() << "\n";
        return 2;
    }

    std::vector<ResultRecord> records;
    try {
        records = run(config);
    } catch (const std::exception& e) {
        std::cerr << "run failed: " << e.what() << "\n";
        return 2;
    }

    std::ofstream file;
    std::ostream* out = &std::cout;
    if (!out_path.empty()) {
        file.open(out_path);
        if (!file) {
            std::cerr << "cannot write to " << out_path << "\n";
            return 2;
        }
        out = &file;
    }
    if (format == "json")
        emit_json(records, config, *out);
    else
        emit_csv(records, config, *out);

    if (assert_checks && !all_checks_satisfied(records)) return 3;
    return 0;
}
