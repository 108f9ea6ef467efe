#include "cyclecert/experiment.hpp"

#include <chrono>
#include <cmath>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

#include "cyclecert/galois_screen.hpp"
#include "cyclecert/invariable.hpp"
#include "cyclecert/perm_model.hpp"
#include "cyclecert/poisson_lab.hpp"
#include "cyclecert/rng.hpp"
#include "cyclecert/stats.hpp"

namespace cyclecert {

namespace {

using nlohmann::json;
using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

std::string format_double(double v) {
    std::ostringstream oss;
    oss.precision(12);
    oss << v;
    return oss.str();
}

constexpr double kSharpExponentTolerance = 0.03;

IntPolynomial polynomial_from_config(const ExperimentConfig& config) {
    const std::string& text = config.polynomial;
    if (text.empty()) throw std::invalid_argument("galois: --poly is required");
    std::size_t first = text.find_first_not_of(" \t");
    if (first != std::string::npos && text[first] == '[') {
        const json arr = json::parse(text);
        if (!arr.is_array()) throw std::invalid_argument("galois: expected a JSON array of coefficients");
        std::vector<mpz_class> coeffs;
        for (const auto& item : arr) {
            if (item.is_number_integer())
                coeffs.emplace_back(static_cast<long>(item.get<std::int64_t>()));
            else if (item.is_string())
                coeffs.emplace_back(item.get<std::string>(), 10);
            else
                throw std::invalid_argument("galois: coefficients must be integers");
        }
        return polynomial_from_coeffs(std::move(coeffs));
    }
    return parse_polynomial(text);
}

json screen_verdict_json(const ScreenVerdict& v) {
    json lists = json::array();
    for (const auto& dl : v.degree_lists) {
        json item;
        item["prime"] = dl.prime;
        item["degrees"] = dl.degrees;
        lists.push_back(std::move(item));
    }
    json cert;
    cert["transitive"] = v.certificate.transitive;
    cert["odd_class_present"] = v.certificate.odd_class_present;
    cert["large_prime_cycle_present"] = v.certificate.large_prime_cycle_present;
    cert["jordan_applicable"] = v.certificate.jordan_applicable;
    if (v.certificate.witness_prime) cert["witness_prime"] = *v.certificate.witness_prime;
    cert["common_elements"] = v.certificate.common_elements;
    json out;
    out["verdict"] = to_string(v.verdict);
    out["primes_used"] = v.primes_used;
    out["primes_skipped"] = v.primes_skipped;
    out["seed"] = v.seed;
    out["degree_lists"] = std::move(lists);
    out["certificate"] = std::move(cert);
    return out;
}

void run_simulate_q(const ExperimentConfig& config, std::vector<ResultRecord>& records) {
    for (std::uint32_t n : config.n_values) {
        const auto start = Clock::now();
        const auto estimates =
            estimate_q(n, config.r, config.trials, mix_seed(config.seed, n), config.threads);
        const double elapsed = ms_since(start);
        for (const auto& qe : estimates) {
            ResultRecord rec;
            rec.experiment = "simulate-q.q";
            rec.n = n;
            rec.r = qe.r;
            rec.trials = qe.trials;
            rec.successes = qe.successes;
            rec.estimate = qe.estimate;
            rec.ci_low = qe.ci_low;
            rec.ci_high = qe.ci_high;
            rec.seed = config.seed;
            rec.elapsed_ms = elapsed;
            records.push_back(std::move(rec));
        }
    }
}

void run_exact_q(const ExperimentConfig& config, std::vector<ResultRecord>& records) {
    for (std::uint32_t n : config.n_values) {
        for (std::uint32_t r = 1; r <= config.r; ++r) {
            const auto start = Clock::now();
            const mpq_class q = exact_q(n, r);
            ResultRecord rec;
            rec.experiment = "exact-q.q";
            rec.n = n;
            rec.r = r;
            rec.estimate = q.get_d();
            rec.seed = config.seed;
            rec.elapsed_ms = ms_since(start);
            rec.extra = json{{"exact", q.get_str()}}.dump();
            records.push_back(std::move(rec));
        }
    }
}

void run_poisson_p(const ExperimentConfig& config, std::vector<ResultRecord>& records) {
    for (std::uint32_t n : config.n_values) {
        const auto start = Clock::now();
        const MembershipEstimate est = estimate_membership(n, config.trials,
                                                           mix_seed(config.seed, n), config.eps,
                                                           config.threads);
        const SizeEstimate size = estimate_A(n, config.trials, mix_seed(config.seed, n ^ 0xA5A5),
                                             config.threads);
        const double elapsed = ms_since(start);

        ResultRecord annealed;
        annealed.experiment = "poisson-p.annealed";
        annealed.n = n;
        annealed.trials = est.trials;
        annealed.successes = est.annealed_successes;
        annealed.estimate = est.annealed;
        annealed.ci_low = est.annealed_ci.lo;
        annealed.ci_high = est.annealed_ci.hi;
        annealed.seed = config.seed;
        annealed.elapsed_ms = elapsed;
        records.push_back(std::move(annealed));

        ResultRecord quenched;
        quenched.experiment = "poisson-p.quenched";
        quenched.n = n;
        quenched.trials = est.trials;
        quenched.successes = est.quenched_successes;
        quenched.estimate = est.quenched;
        quenched.ci_low = est.quenched_ci.lo;
        quenched.ci_high = est.quenched_ci.hi;
        quenched.satisfied = est.quenched <= est.annealed;
        quenched.seed = config.seed;
        quenched.elapsed_ms = elapsed;
        quenched.extra = json{{"censored_trials", est.censored_trials}}.dump();
        records.push_back(std::move(quenched));

        ResultRecord mean_size;
        mean_size.experiment = "poisson-p.mean_size";
        mean_size.n = n;
        mean_size.trials = size.trials;
        mean_size.estimate = size.mean;
        mean_size.ci_low = size.mean - kZ95 * size.stderr_;
        mean_size.ci_high = size.mean + kZ95 * size.stderr_;
        mean_size.bound = static_cast<double>(n);  // E|S intersect [n]| <= n
        mean_size.satisfied = size.mean <= static_cast<double>(n);
        mean_size.seed = config.seed;
        mean_size.elapsed_ms = elapsed;
        records.push_back(std::move(mean_size));
    }
}

void run_eta_fit(const ExperimentConfig& config, std::vector<ResultRecord>& records) {
    const auto start = Clock::now();
    const EtaFit fit =
        fit_eta(config.n_values, config.trials, config.seed, config.eps, config.threads);
    const double elapsed = ms_since(start);
    for (const auto& pt : fit.points) {
        ResultRecord annealed;
        annealed.experiment = "eta-fit.annealed";
        annealed.n = pt.n;
        annealed.trials = pt.trials;
        annealed.successes = pt.annealed_successes;
        annealed.estimate = pt.annealed;
        annealed.ci_low = pt.annealed_ci.lo;
        annealed.ci_high = pt.annealed_ci.hi;
        annealed.seed = config.seed;
        annealed.elapsed_ms = elapsed;
        records.push_back(std::move(annealed));

        ResultRecord quenched;
        quenched.experiment = "eta-fit.quenched";
        quenched.n = pt.n;
        quenched.trials = pt.trials;
        quenched.successes = pt.quenched_successes;
        quenched.estimate = pt.quenched;
        quenched.ci_low = pt.quenched_ci.lo;
        quenched.ci_high = pt.quenched_ci.hi;
        quenched.satisfied = pt.quenched <= pt.annealed;
        quenched.seed = config.seed;
        quenched.elapsed_ms = elapsed;
        records.push_back(std::move(quenched));
    }

    const double ln2_minus_1 = std::log(2.0) - 1.0;
    ResultRecord slope_a;
    slope_a.experiment = "eta-fit.slope_annealed";
    slope_a.trials = config.trials;
    slope_a.estimate = fit.annealed.slope;
    slope_a.ci_low = fit.annealed.slope - kZ95 * fit.annealed.slope_stderr;
    slope_a.ci_high = fit.annealed.slope + kZ95 * fit.annealed.slope_stderr;
    slope_a.bound = fit.eta_reference;
    slope_a.satisfied = fit.annealed.slope > ln2_minus_1 && fit.annealed.slope < 0.0;
    slope_a.seed = config.seed;
    slope_a.elapsed_ms = elapsed;
    slope_a.extra = json{{"distance_to_eta", std::abs(fit.annealed.slope - fit.eta_reference)}}.dump();
    records.push_back(std::move(slope_a));

    ResultRecord slope_q;
    slope_q.experiment = "eta-fit.slope_quenched";
    slope_q.trials = config.trials;
    slope_q.estimate = fit.quenched.slope;
    slope_q.ci_low = fit.quenched.slope - kZ95 * fit.quenched.slope_stderr;
    slope_q.ci_high = fit.quenched.slope + kZ95 * fit.quenched.slope_stderr;
    slope_q.bound = ln2_minus_1;
    slope_q.satisfied = fit.quenched.slope < fit.annealed.slope;
    slope_q.seed = config.seed;
    slope_q.elapsed_ms = elapsed;
    records.push_back(std::move(slope_q));
}

void run_tails(const ExperimentConfig& config, std::vector<ResultRecord>& records) {
    for (std::uint32_t n : config.n_values) {
        {
            const auto start = Clock::now();
            const BoundReport r =
                verify_tail_Z(n, config.eps, config.trials, mix_seed(config.seed, n), config.threads);
            ResultRecord rec;
            rec.experiment = "tails.Z";
            rec.n = n;
            rec.trials = r.trials;
            rec.successes = r.successes;
            rec.estimate = r.estimate;
            rec.ci_low = r.ci.lo;
            rec.ci_high = r.ci.hi;
            rec.bound = std::exp(r.log_bound);
            rec.satisfied = r.satisfied;
            rec.seed = config.seed;
            rec.elapsed_ms = ms_since(start);
            records.push_back(std::move(rec));
        }
        {
            const auto start = Clock::now();
            const BoundReport r =
                verify_tail_W(n, config.trials, mix_seed(config.seed, ~n), config.threads);
            ResultRecord rec;
            rec.experiment = "tails.W";
            rec.n = n;
            rec.trials = r.trials;
            rec.successes = r.successes;
            rec.estimate = r.estimate;
            rec.ci_low = r.ci.lo;
            rec.ci_high = r.ci.hi;
            rec.bound = std::exp(r.log_bound);
            rec.satisfied = r.satisfied;
            rec.seed = config.seed;
            rec.elapsed_ms = ms_since(start);
            records.push_back(std::move(rec));
        }
        if (config.x > 0.0) {
            const auto start = Clock::now();
            const SharpReport r =
                verify_sharp(n, config.x, config.trials, mix_seed(config.seed, n + 1), config.threads);
            const double elapsed = ms_since(start);
            ResultRecord rec;
            rec.experiment = "tails.sharp";
            rec.n = n;
            rec.trials = r.trials;
            rec.estimate = r.exponent_typical;
            rec.ci_low = r.exponent_typical - kZ95 * r.exponent_typical_stderr;
            rec.ci_high = r.exponent_typical + kZ95 * r.exponent_typical_stderr;
            rec.bound = r.rate;
            rec.satisfied = std::abs(r.exponent_typical - r.rate) <= kSharpExponentTolerance;
            rec.seed = config.seed;
            rec.elapsed_ms = elapsed;
            rec.extra = json{{"exponent_is", r.exponent_is},
                             {"p_estimate", r.p_estimate},
                             {"p_stderr", r.p_stderr},
                             {"threshold", r.threshold}}
                            .dump();
            records.push_back(std::move(rec));
        }
    }
}

void run_gf_check(const ExperimentConfig& config, std::vector<ResultRecord>& records) {
    for (std::uint32_t n : config.n_values) {
        const auto start = Clock::now();
        const auto coeffs = gf_coefficients(n);
        std::uint64_t ones = 0;
        for (const auto& c : coeffs) ones += (c == 1);
        ResultRecord rec;
        rec.experiment = "gf-check.all_one";
        rec.n = n;
        rec.trials = coeffs.size();
        rec.successes = ones;
        rec.estimate = static_cast<double>(coeffs.size() - ones);  // deviating coefficients
        rec.satisfied = (ones == coeffs.size());
        rec.seed = config.seed;
        rec.elapsed_ms = ms_since(start);
        records.push_back(std::move(rec));
    }
}

void run_tv_dist(const ExperimentConfig& config, std::vector<ResultRecord>& records) {
    for (std::uint32_t n : config.n_values) {
        const auto start = Clock::now();
        const TvReport r = tv_distance_exact(n, config.m);
        ResultRecord rec;
        rec.experiment = "tv-dist.tv";
        rec.n = n;
        rec.r = config.m;
        rec.estimate = r.tv;
        rec.seed = config.seed;
        rec.elapsed_ms = ms_since(start);
        rec.extra = json{{"off_support_mass", r.off_support_mass}}.dump();
        records.push_back(std::move(rec));
    }
}

void run_fourfold(const ExperimentConfig& config, std::vector<ResultRecord>& records) {
    for (std::uint32_t n : config.n_values) {
        const auto start = Clock::now();
        const FourfoldReport r = fourfold_intersection_sim(n, config.trials,
                                                           mix_seed(config.seed, n),
                                                           config.cutoff, config.threads);
        const double elapsed = ms_since(start);

        ResultRecord empty;
        empty.experiment = "fourfold.empty_beyond_L";
        empty.n = n;
        empty.r = config.cutoff;
        empty.trials = r.trials;
        empty.successes = r.empty_beyond_cutoff;
        empty.estimate = static_cast<double>(r.empty_beyond_cutoff) / static_cast<double>(r.trials);
        const Interval eci = wilson_ci(r.empty_beyond_cutoff, r.trials, kZ95);
        empty.ci_low = eci.lo;
        empty.ci_high = eci.hi;
        empty.seed = config.seed;
        empty.elapsed_ms = elapsed;
        records.push_back(std::move(empty));

        ResultRecord ones;
        ones.experiment = "fourfold.one_in_all";
        ones.n = n;
        ones.trials = r.trials;
        ones.successes = r.one_in_all;
        ones.estimate = static_cast<double>(r.one_in_all) / static_cast<double>(r.trials);
        const Interval oci = wilson_ci(r.one_in_all, r.trials, kZ99);
        ones.ci_low = oci.lo;
        ones.ci_high = oci.hi;
        const double closed_form = std::pow(1.0 - std::exp(-1.0), 4.0);
        ones.bound = closed_form;
        ones.satisfied = (closed_form >= oci.lo && closed_form <= oci.hi);
        ones.seed = config.seed;
        ones.elapsed_ms = elapsed;
        records.push_back(std::move(ones));

        ResultRecord maxima;
        maxima.experiment = "fourfold.max_element";
        maxima.n = n;
        maxima.trials = r.trials;
        maxima.estimate = static_cast<double>(r.max_element_p50);
        maxima.seed = config.seed;
        maxima.elapsed_ms = elapsed;
        maxima.extra = json{{"p50", r.max_element_p50},
                            {"p90", r.max_element_p90},
                            {"p99", r.max_element_p99},
                            {"max", r.max_element_max}}
                           .dump();
        records.push_back(std::move(maxima));
    }
}

void run_galois(const ExperimentConfig& config, std::vector<ResultRecord>& records) {
    const IntPolynomial p = polynomial_from_config(config);
    PrimeRange range = default_prime_range(p.degree());
    if (config.prime_lo != 0 || config.prime_hi != 0) range = {config.prime_lo, config.prime_hi};
    const auto start = Clock::now();
    const ScreenVerdict v = screen(p, config.r, range, config.seed);
    ResultRecord rec;
    rec.experiment = "galois.verdict";
    rec.n = p.degree();
    rec.r = config.r;
    rec.trials = v.primes_used + v.primes_skipped;
    rec.successes = v.primes_used;
    rec.estimate = (v.verdict == Verdict::POSITIVE) ? 1.0 : 0.0;
    rec.satisfied = (v.verdict == Verdict::POSITIVE);
    rec.seed = config.seed;
    rec.elapsed_ms = ms_since(start);
    rec.extra = screen_verdict_json(v).dump();
    records.push_back(std::move(rec));
}

}  // namespace

const char* to_string(ExperimentKind kind) {
    switch (kind) {
        case ExperimentKind::simulate_q: return "simulate-q";
        case ExperimentKind::poisson_p: return "poisson-p";
        case ExperimentKind::eta_fit: return "eta-fit";
        case ExperimentKind::tails: return "tails";
        case ExperimentKind::gf_check: return "gf-check";
        case ExperimentKind::tv_dist: return "tv-dist";
        case ExperimentKind::exact_q_kind: return "exact-q";
        case ExperimentKind::fourfold: return "fourfold";
        case ExperimentKind::galois: return "galois";
    }
    return "unknown";
}

std::optional<ExperimentKind> experiment_from_string(std::string_view name) {
    for (ExperimentKind kind :
         {ExperimentKind::simulate_q, ExperimentKind::poisson_p, ExperimentKind::eta_fit,
          ExperimentKind::tails, ExperimentKind::gf_check, ExperimentKind::tv_dist,
          ExperimentKind::exact_q_kind, ExperimentKind::fourfold, ExperimentKind::galois}) {
        if (name == to_string(kind)) return kind;
    }
    return std::nullopt;
}

void validate_config(const ExperimentConfig& config) {
    if (config.threads < 1) throw std::invalid_argument("threads must be >= 1");
    if (config.experiment != ExperimentKind::galois) {
        if (config.n_values.empty()) throw std::invalid_argument("at least one n is required");
    }
    switch (config.experiment) {
        case ExperimentKind::simulate_q:
            if (config.r < 1) throw std::invalid_argument("r must be >= 1");
            if (config.trials < 1) throw std::invalid_argument("trials must be >= 1");
            for (auto n : config.n_values)
                if (n < 2) throw std::invalid_argument("simulate-q: n must be >= 2");
            break;
        case ExperimentKind::exact_q_kind:
            if (config.r < 1) throw std::invalid_argument("r must be >= 1");
            for (auto n : config.n_values)
                if (n < 1 || n > kExactQCap)
                    throw std::invalid_argument("exact-q: n must be in [1, 12]");
            break;
        case ExperimentKind::poisson_p:
        case ExperimentKind::eta_fit:
            if (config.trials < 1) throw std::invalid_argument("trials must be >= 1");
            if (!(config.eps > 0.0)) throw std::invalid_argument("eps must be > 0");
            for (auto n : config.n_values)
                if (n < 3) throw std::invalid_argument("n must be >= 3 (m(n) must exist)");
            if (config.experiment == ExperimentKind::eta_fit && config.n_values.size() < 2)
                throw std::invalid_argument("eta-fit: need at least two n values");
            break;
        case ExperimentKind::tails:
            if (config.trials < 1) throw std::invalid_argument("trials must be >= 1");
            if (!(config.eps > 0.0)) throw std::invalid_argument("eps must be > 0");
            if (config.x < 0.0) throw std::invalid_argument("x must be >= 0");
            for (auto n : config.n_values)
                if (n < 3) throw std::invalid_argument("tails: n must be >= 3");
            break;
        case ExperimentKind::gf_check:
            for (auto n : config.n_values)
                if (n < 1 || n > 500) throw std::invalid_argument("gf-check: n must be in [1, 500]");
            break;
        case ExperimentKind::tv_dist:
            for (auto n : config.n_values) {
                if (n > 20) throw std::invalid_argument("tv-dist: n must be <= 20");
                if (config.m < 1 || config.m > n)
                    throw std::invalid_argument("tv-dist: need 1 <= m <= n");
            }
            break;
        case ExperimentKind::fourfold:
            if (config.trials < 1) throw std::invalid_argument("trials must be >= 1");
            for (auto n : config.n_values) {
                if (n < 2) throw std::invalid_argument("fourfold: n must be >= 2");
                if (config.cutoff < 1 || config.cutoff > n)
                    throw std::invalid_argument("fourfold: need 1 <= L <= n");
            }
            break;
        case ExperimentKind::galois: {
            if (config.r < 1) throw std::invalid_argument("galois: r must be >= 1");
            const IntPolynomial p = polynomial_from_config(config);  // parse errors surface here
            if (p.degree() < 2) throw std::invalid_argument("galois: degree must be >= 2");
            if (config.prime_lo != 0 || config.prime_hi != 0) {
                if (config.prime_lo < 2 || config.prime_hi <= config.prime_lo)
                    throw std::invalid_argument("galois: invalid prime range");
            }
            break;
        }
    }
}

std::vector<ResultRecord> run(const ExperimentConfig& config) {
    validate_config(config);
    std::vector<ResultRecord> records;
    switch (config.experiment) {
        case ExperimentKind::simulate_q: run_simulate_q(config, records); break;
        case ExperimentKind::poisson_p: run_poisson_p(config, records); break;
        case ExperimentKind::eta_fit: run_eta_fit(config, records); break;
        case ExperimentKind::tails: run_tails(config, records); break;
        case ExperimentKind::gf_check: run_gf_check(config, records); break;
        case ExperimentKind::tv_dist: run_tv_dist(config, records); break;
        case ExperimentKind::exact_q_kind: run_exact_q(config, records); break;
        case ExperimentKind::fourfold: run_fourfold(config, records); break;
        case ExperimentKind::galois: run_galois(config, records); break;
    }
    return records;
}

std::string config_echo(const ExperimentConfig& config) {
    std::ostringstream oss;
    oss << kVersionTag << "; experiment=" << to_string(config.experiment);
    oss << " n=";
    for (std::size_t i = 0; i < config.n_values.size(); ++i) {
        if (i) oss << ",";
        oss << config.n_values[i];
    }
    oss << " r=" << config.r << " trials=" << config.trials << " eps=" << format_double(config.eps);
    if (config.x > 0.0) oss << " x=" << format_double(config.x);
    if (config.experiment == ExperimentKind::fourfold) oss << " L=" << config.cutoff;
    if (config.experiment == ExperimentKind::tv_dist) oss << " m=" << config.m;
    if (config.experiment == ExperimentKind::galois) {
        oss << " poly=\"" << config.polynomial << "\"";
        if (config.prime_lo != 0 || config.prime_hi != 0)
            oss << " prime-range=" << config.prime_lo << ":" << config.prime_hi;
    }
    oss << " seed=" << config.seed;
    return oss.str();
}

void emit_csv(std::span<const ResultRecord> records, const ExperimentConfig& config,
              std::ostream& out) {
    if (records.empty()) throw std::invalid_argument("emit_csv: no records");
    out << "# " << config_echo(config) << "\n";
    out << "experiment,n,r,trials,successes,estimate,ci_low,ci_high,bound,satisfied,seed,"
           "elapsed_ms\n";
    for (const auto& rec : records) {
        out << rec.experiment << "," << rec.n << "," << rec.r << "," << rec.trials << ",";
        if (rec.successes) out << *rec.successes;
        out << ",";
        if (rec.estimate) out << format_double(*rec.estimate);
        out << ",";
        if (rec.ci_low) out << format_double(*rec.ci_low);
        out << ",";
        if (rec.ci_high) out << format_double(*rec.ci_high);
        out << ",";
        if (rec.bound) out << format_double(*rec.bound);
        out << ",";
        if (rec.satisfied) out << (*rec.satisfied ? "true" : "false");
        out << "," << rec.seed << "," << format_double(rec.elapsed_ms) << "\n";
    }
}

void emit_json(std::span<const ResultRecord> records, const ExperimentConfig& config,
               std::ostream& out) {
    if (records.empty()) throw std::invalid_argument("emit_json: no records");
    json doc;
    doc["version"] = kVersionTag;
    json cfg;
    cfg["experiment"] = to_string(config.experiment);
    cfg["n"] = config.n_values;
    cfg["r"] = config.r;
    cfg["trials"] = config.trials;
    cfg["eps"] = config.eps;
    if (config.x > 0.0) cfg["x"] = config.x;
    if (config.experiment == ExperimentKind::fourfold) cfg["L"] = config.cutoff;
    if (config.experiment == ExperimentKind::tv_dist) cfg["m"] = config.m;
    if (config.experiment == ExperimentKind::galois) {
        cfg["poly"] = config.polynomial;
        if (config.prime_lo != 0 || config.prime_hi != 0) {
            cfg["prime_lo"] = config.prime_lo;
            cfg["prime_hi"] = config.prime_hi;
        }
    }
    cfg["seed"] = config.seed;
    doc["config"] = std::move(cfg);

    json rows = json::array();
    for (const auto& rec : records) {
        json row;
        row["experiment"] = rec.experiment;
        row["n"] = rec.n;
        row["r"] = rec.r;
        row["trials"] = rec.trials;
        if (rec.successes) row["successes"] = *rec.successes;
        if (rec.estimate) row["estimate"] = *rec.estimate;
        if (rec.ci_low) row["ci_low"] = *rec.ci_low;
        if (rec.ci_high) row["ci_high"] = *rec.ci_high;
        if (rec.bound) row["bound"] = *rec.bound;
        if (rec.satisfied) row["satisfied"] = *rec.satisfied;
        row["seed"] = rec.seed;
        row["elapsed_ms"] = rec.elapsed_ms;
        if (!rec.extra.empty()) row["extra"] = json::parse(rec.extra);
        rows.push_back(std::move(row));
    }
    doc["records"] = std::move(rows);
    out << doc.dump(2) << "\n";
}

bool all_checks_satisfied(std::span<const ResultRecord> records) {
    for (const auto& rec : records)
        if (rec.satisfied && !*rec.satisfied) return false;
    return true;
}

}  // namespace cyclecert
