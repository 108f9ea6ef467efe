#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace cyclecert {

inline constexpr const char* kVersionTag = "cyclecert 0.1.0";

enum class ExperimentKind {
    simulate_q,
    poisson_p,
    eta_fit,
    tails,
    gf_check,
    tv_dist,
    exact_q_kind,
    fourfold,
    galois
};

const char* to_string(ExperimentKind kind);
std::optional<ExperimentKind> experiment_from_string(std::string_view name);

struct ExperimentConfig {
    ExperimentKind experiment = ExperimentKind::simulate_q;
    std::vector<std::uint32_t> n_values;
    std::uint32_t r = 4;           // r_max for sweeps, sample count for galois
    std::uint64_t trials = 10000;
    double eps = 0.01;
    double x = 0.0;                // > 0 adds the tilted-rate run to `tails`
    std::uint32_t cutoff = 64;     // L for fourfold
    std::uint32_t m = 2;           // marginal window for tv-dist
    std::uint64_t prime_lo = 0;    // 0,0 = default range [deg^2, 100 deg^2]
    std::uint64_t prime_hi = 0;
    std::string polynomial;        // surface syntax or JSON coefficient array
    std::uint64_t seed = 1;
    int threads = 1;
};

// One output row.  The CSV schema is fixed:
// experiment,n,r,trials,successes,estimate,ci_low,ci_high,bound,satisfied,seed,elapsed_ms
// with absent fields left empty; `extra` carries JSON-only payload.
struct ResultRecord {
    std::string experiment;  // "<kind>.<metric>"
    std::uint64_t n = 0;
    std::uint64_t r = 0;
    std::uint64_t trials = 0;
    std::optional<std::uint64_t> successes;
    std::optional<double> estimate;
    std::optional<double> ci_low;
    std::optional<double> ci_high;
    std::optional<double> bound;
    std::optional<bool> satisfied;
    std::uint64_t seed = 0;
    double elapsed_ms = 0.0;
    std::string extra;  // serialized JSON object, may be empty
};

// Rejects invalid parameter combinations before any work starts.
void validate_config(const ExperimentConfig& config);

std::vector<ResultRecord> run(const ExperimentConfig& config);

// Deterministic config echo embedded in every output (threads and wall time
// are execution details and excluded, so reruns compare byte-identical).
std::string config_echo(const ExperimentConfig& config);

void emit_csv(std::span<const ResultRecord> records, const ExperimentConfig& config,
              std::ostream& out);
void emit_json(std::span<const ResultRecord> records, const ExperimentConfig& config,
               std::ostream& out);

// True when every record with a satisfied flag has it set.
bool all_checks_satisfied(std::span<const ResultRecord> records);

}  // namespace cyclecert
