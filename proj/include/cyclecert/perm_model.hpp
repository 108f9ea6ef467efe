#pragma once

#include <cstdint>
#include <vector>

#include <gmpxx.h>

#include "cyclecert/cycle_type.hpp"
#include "cyclecert/rng.hpp"

namespace cyclecert {

// Largest n for which the exact partition table is enumerated (5604 entries).
inline constexpr std::uint32_t kPartitionCap = 30;

// Exact sampler for the cycle type of a uniform random permutation of [n]:
// the cycle containing the smallest unplaced element has length uniform on
// the remaining size, so repeatedly drawing a uniform length and removing it
// reproduces the uniform-permutation law in O(number of cycles) draws.
CycleType sample_cycle_type(std::uint32_t n, TrialRng& rng);

// Samples (X_1, ..., X_limit) with X_k ~ Poisson(x/k) independent.  The
// zero-probabilities exp(-x/k) are precomputed once so per-coordinate draws
// are one uniform in the common X_k = 0 case.
class PoissonSampler {
public:
    PoissonSampler(std::uint32_t limit, double x = 1.0);

    std::uint32_t limit() const { return limit_; }
    double tilt() const { return x_; }

    void sample_into(MultiplicityVector& out, TrialRng& rng) const;
    MultiplicityVector sample(TrialRng& rng) const;

    // sum_k k X_k of a fresh sample, without materializing the vector
    std::uint64_t sample_weighted_sum(TrialRng& rng) const;

private:
    std::uint32_t limit_;
    double x_;
    std::vector<double> zero_prob_;  // exp(-x/k), k = 1..limit
};

MultiplicityVector sample_poisson(std::uint32_t limit, TrialRng& rng);
MultiplicityVector sample_poisson_tilted(std::uint32_t limit, double x, TrialRng& rng);

struct PartitionEntry {
    CycleType type;
    mpq_class probability;  // mass under the uniform measure on S_n
    double probability_approx;
};

struct PartitionTable {
    std::uint32_t n = 0;
    std::vector<PartitionEntry> entries;
};

// Complete table of partitions of n with exact cycle-type probabilities
// 1 / prod_k (k^{m_k} m_k!).  Rejects n > kPartitionCap.
PartitionTable enumerate_partitions(std::uint32_t n);

// floor(n / ln n), defined for n >= 3.
std::uint32_t m_of(std::uint32_t n);

// Prefix statistics of a multiplicity vector: Z_k counts elements up to k,
// W_k sums them, and tau_eps / tau / t locate the last windowed violations
// of the typicality thresholds.
struct ProfileStats {
    std::vector<std::uint32_t> z;  // z[k] = Z_k, index 0 unused
    std::vector<std::uint64_t> w;  // w[k] = W_k
    std::uint32_t tau_eps = 0;     // largest k in [2, limit] with Z_k >= (1+eps) ln k
    std::uint32_t tau = 0;         // largest k in [3, limit] with W_{m(k)} >= k
    std::uint32_t t = 0;           // max(tau_eps, tau)
    bool censored = false;         // t hit the truncation window
};

ProfileStats profile(const MultiplicityVector& mv, double eps = 0.01);

// Buffer-reusing variant for hot loops.
void profile_into(const MultiplicityVector& mv, double eps, ProfileStats& out);

}  // namespace cyclecert
