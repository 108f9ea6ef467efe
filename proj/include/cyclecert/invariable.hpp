#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include <gmpxx.h>

#include "cyclecert/cycle_type.hpp"
#include "cyclecert/stats.hpp"

namespace cyclecert {

// Largest n for which exact_q enumerates mask classes (77 partitions at 12).
inline constexpr std::uint32_t kExactQCap = 12;

// Evidence extracted from a list of cycle types of common degree n:
//  - transitive: the sumsets share no element besides 0 and n, so every
//    choice of representatives generates a transitive subgroup;
//  - odd_class_present: some type has odd parity (rules out the alternating
//    group);
//  - large_prime_cycle_present: some type contains a prime length in
//    (n/2, n-5], whose power is a long prime cycle;
//  - jordan_applicable: n > 12, the degree range where transitive + long
//    prime cycle forces the group to contain the alternating group.
struct Certificate {
    std::uint32_t n = 0;
    bool transitive = false;
    bool odd_class_present = false;
    bool large_prime_cycle_present = false;
    std::optional<std::uint32_t> witness_prime;
    bool jordan_applicable = false;
    std::vector<std::uint32_t> common_elements;  // empty iff transitive
};

// Transitivity part only.
Certificate invariably_transitive(std::span<const CycleType> cts);

// All certificate fields.
Certificate full_certificate(std::span<const CycleType> cts);

struct QEstimate {
    std::uint32_t n = 0;
    std::uint32_t r = 0;
    std::uint64_t trials = 0;
    std::uint64_t successes = 0;
    double estimate = 0.0;
    double ci_low = 0.0;   // Wilson 95%
    double ci_high = 0.0;
};

// Monte Carlo estimate of q(n, r) = P(r iid uniform cycle types have empty
// nontrivial sumset intersection), for every r = 1..r_max from the same
// draws (prefix coupling: the per-trial success indicator is nondecreasing
// in r).
std::vector<QEstimate> estimate_q(std::uint32_t n, std::uint32_t r_max, std::uint64_t trials,
                                  std::uint64_t seed, int threads = 1);

// Exact q(n, r) for n <= kExactQCap, by grouping partitions into sumset-mask
// classes and propagating the exact intersection distribution over r draws.
mpq_class exact_q(std::uint32_t n, std::uint32_t r);

// Number of invariant sets of size k: coefficient of z^k in
// prod_j (1 + z^j)^{m_j}.
mpz_class count_invariant_sets(const CycleType& ct, std::uint32_t k);

struct MeanEstimate {
    std::uint64_t trials = 0;
    double mean = 0.0;
    double stderr_ = 0.0;
};

// Monte Carlo mean of count_invariant_sets over uniform cycle types of S_n;
// the exact expectation is 1 for every 0 < k < n.
MeanEstimate mean_invariant_sets(std::uint32_t n, std::uint32_t k, std::uint64_t trials,
                                 std::uint64_t seed, int threads = 1);

// Exact expectation of count_invariant_sets under the uniform measure,
// computed over the full partition table (n <= kPartitionCap).
mpq_class exact_mean_invariant_sets(std::uint32_t n, std::uint32_t k);

struct TvReport {
    std::uint32_t n = 0;
    std::uint32_t m = 0;
    double tv = 0.0;
    // product-Poisson mass outside the reachable support, included exactly
    // in tv via the complement
    double off_support_mass = 0.0;
};

// Exact total variation distance between the joint law of the number of
// 1..m-cycles of a uniform permutation of S_n and the product of
// Poisson(1/j) laws.  Requires n <= 20 so the partition table and the
// support {c : sum j c_j <= n} stay enumerable.
TvReport tv_distance_exact(std::uint32_t n, std::uint32_t m);

}  // namespace cyclecert
