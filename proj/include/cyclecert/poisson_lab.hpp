#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include <gmpxx.h>

#include "cyclecert/cycle_type.hpp"
#include "cyclecert/perm_model.hpp"
#include "cyclecert/stats.hpp"

namespace cyclecert {

// log moment generating functions of the prefix statistics: Z_n has
// psi_Z(lambda) = H_n (e^lambda - 1) and W_n has
// psi_W(lambda) = sum_{j<=n} (e^{j lambda} - 1) / j.
double psi_Z(std::uint32_t n, double lambda);
double psi_W(std::uint32_t n, double lambda);  // throws std::range_error on overflow

// Chernoff exponent (1+eps) ln(1+eps) - eps; ~ eps^2/2 near zero.
double beta(double eps);

// Large deviation rate x - 1 - x ln x for the upper tail of Z_n / ln n.
double rate_function(double x);

// min over a lambda grid (plus the closed-form candidates) of
// psi(lambda) - a lambda: an upper bound for log P(Z_n >= a) resp.
// log P(W_n >= a).  Requires a > E Z_n = H_n resp. a > E W_n = n.
double markov_bound_Z(std::uint32_t n, double a);
double markov_bound_W(std::uint32_t n, double a);

// (1 - ln 2 - ln(1/ln 2)) / ln 2: the decay exponent of the annealed
// membership probabilities.
double eta_constant();

// log Radon-Nikodym weight of a sample drawn under the tilted product law
// with means x/k: (x - 1) H_limit - Z_limit ln x.
double tilt_log_weight(const MultiplicityVector& mv, double x);

struct BoundReport {
    std::uint32_t n = 0;
    std::uint64_t trials = 0;
    std::uint64_t successes = 0;
    double estimate = 0.0;
    Interval ci;           // Wilson 95%, probability scale
    double log_bound = 0.0;
    double log_estimate = 0.0;  // -inf when no successes
    Interval log_ci;
    bool satisfied = false;  // log(ci.hi) <= log_bound
};

// Monte Carlo check of P(Z_n >= (1+eps) ln n) against e n^{-beta(eps)}.
// Z_n is drawn directly as Poisson(H_n) (the law of the sum).
BoundReport verify_tail_Z(std::uint32_t n, double eps, std::uint64_t trials, std::uint64_t seed,
                          int threads = 1);

// Monte Carlo check of P(W_{m(n)} >= n) against exp(-ln n (lnln n - 1)).
BoundReport verify_tail_W(std::uint32_t n, std::uint64_t trials, std::uint64_t seed,
                          int threads = 1);

struct SharpReport {
    std::uint32_t n = 0;
    double x = 0.0;
    std::uint64_t trials = 0;
    double threshold = 0.0;    // x ln n
    double p_estimate = 0.0;   // importance-sampling estimate of P(Z_n >= x ln n)
    double p_stderr = 0.0;
    double exponent_is = 0.0;  // ln(p_estimate) / ln n
    // (1 / ln n) times the mean log weight under the tilted law; a consistent
    // estimator of the rate with expectation rate * H_n / ln n, free of the
    // O(1/ln n) prefactor bias that dominates exponent_is at feasible n
    double exponent_typical = 0.0;
    double exponent_typical_stderr = 0.0;
    double rate = 0.0;  // rate_function(x)
};

// Estimates P(Z_n >= x ln n) by exponential tilting: Z is drawn under the
// product law with means x/k (so Z ~ Poisson(x H_n)) and reweighted by
// exp((x-1) H_n) x^{-Z}.  With x = 1 the weights are identically 1 and
// p_estimate is the plain Monte Carlo estimate.
SharpReport verify_sharp(std::uint32_t n, double x, std::uint64_t trials, std::uint64_t seed,
                         int threads = 1);

struct MembershipEstimate {
    std::uint32_t n = 0;
    std::uint64_t trials = 0;
    std::uint64_t annealed_successes = 0;  // n in S
    double annealed = 0.0;
    Interval annealed_ci;
    std::uint64_t quenched_successes = 0;  // T < m(n) and n in S
    double quenched = 0.0;
    Interval quenched_ci;
    // trials whose windowed T hit the truncation, where the unobserved tail
    // could raise T
    std::uint64_t censored_trials = 0;
};

// Annealed and quenched membership probabilities of n in the random sumset,
// from the same draws (the quenched event is nested, so the estimate is
// pathwise <= the annealed one).  Requires n >= 3 so m(n) is defined.
MembershipEstimate estimate_membership(std::uint32_t n, std::uint64_t trials, std::uint64_t seed,
                                       double eps = 0.01, int threads = 1);

struct SizeEstimate {
    std::uint32_t n = 0;
    std::uint64_t trials = 0;
    double mean = 0.0;  // estimate of E |S intersect [1, n]|
    double stderr_ = 0.0;
};

SizeEstimate estimate_A(std::uint32_t n, std::uint64_t trials, std::uint64_t seed,
                        int threads = 1);

struct EtaFit {
    std::vector<MembershipEstimate> points;
    LineFit annealed;  // log annealed estimate regressed on log n
    LineFit quenched;
    double eta_reference = 0.0;
};

// Dyadic decay-rate fit of the membership probabilities.
EtaFit fit_eta(std::span<const std::uint32_t> n_list, std::uint64_t trials, std::uint64_t seed,
               double eps = 0.01, int threads = 1);

// Coefficients of prod_{k=1}^{n} exp(z^k / k) through degree n, in exact
// rational arithmetic.  All of them equal 1.  Cap n <= 500.
std::vector<mpq_class> gf_coefficients(std::uint32_t n);

struct FourfoldReport {
    std::uint32_t n = 0;
    std::uint64_t trials = 0;
    std::uint32_t cutoff = 0;          // L
    std::uint64_t empty_beyond_cutoff = 0;  // no common element in [L, n]
    std::uint64_t one_in_all = 0;           // 1 in all four sumsets
    // distribution of the largest common element in [1, n] (0 when none)
    std::uint32_t max_element_p50 = 0;
    std::uint32_t max_element_p90 = 0;
    std::uint32_t max_element_p99 = 0;
    std::uint32_t max_element_max = 0;
};

// Intersects four independent windowed sumsets per trial.
FourfoldReport fourfold_intersection_sim(std::uint32_t n, std::uint64_t trials,
                                         std::uint64_t seed, std::uint32_t cutoff,
                                         int threads = 1);

}  // namespace cyclecert
