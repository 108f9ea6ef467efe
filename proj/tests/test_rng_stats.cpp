#include "doctest.h"

#include <cmath>
#include <set>
#include <vector>

#include "cyclecert/parallel.hpp"
#include "cyclecert/rng.hpp"
#include "cyclecert/stats.hpp"

using namespace cyclecert;

TEST_CASE("per-trial substreams are reproducible and distinct") {
    TrialRng a(42, 7);
    TrialRng b(42, 7);
    TrialRng c(42, 8);
    bool any_diff = false;
    for (int i = 0; i < 64; ++i) {
        const std::uint64_t va = a.next();
        CHECK(va == b.next());
        if (va != c.next()) any_diff = true;
    }
    CHECK(any_diff);
}

TEST_CASE("bounded draws are in range and roughly uniform") {
    TrialRng rng(1, 0);
    std::vector<std::uint64_t> counts(10, 0);
    const int draws = 100000;
    for (int i = 0; i < draws; ++i) ++counts[rng.below(10)];
    for (std::uint64_t c : counts) {
        CHECK(c > draws / 10 - 600);
        CHECK(c < draws / 10 + 600);
    }
}

TEST_CASE("uniform01 stays in [0,1)") {
    TrialRng rng(3, 3);
    for (int i = 0; i < 10000; ++i) {
        const double u = rng.uniform01();
        CHECK(u >= 0.0);
        CHECK(u < 1.0);
    }
}

TEST_CASE("poisson draw matches pmf at mean 1") {
    const int trials = 200000;
    int zeros = 0;
    long long sum = 0;
    for (int i = 0; i < trials; ++i) {
        TrialRng rng(99, i);
        const std::uint32_t k = poisson_draw(rng, 1.0);
        zeros += (k == 0);
        sum += k;
    }
    const double p0 = static_cast<double>(zeros) / trials;
    CHECK(std::abs(p0 - std::exp(-1.0)) < 0.004);  // ~4 sigma
    const double mean = static_cast<double>(sum) / trials;
    CHECK(std::abs(mean - 1.0) < 0.01);
}

TEST_CASE("large-mean poisson splitting preserves the mean and variance") {
    const int trials = 100000;
    const double mean = 18.135;
    double sum = 0, sumsq = 0;
    for (int i = 0; i < trials; ++i) {
        TrialRng rng(123, i);
        const double k = poisson_draw(rng, mean);
        sum += k;
        sumsq += k * k;
    }
    const double m = sum / trials;
    const double var = sumsq / trials - m * m;
    CHECK(std::abs(m - mean) < 0.06);
    CHECK(std::abs(var - mean) < 0.3);
}

TEST_CASE("wilson interval brackets the point estimate") {
    const Interval ci = wilson_ci(37, 1000, kZ95);
    CHECK(ci.lo < 0.037);
    CHECK(ci.hi > 0.037);
    CHECK(ci.lo > 0.0);
    const Interval zero = wilson_ci(0, 1000000, kZ95);
    CHECK(zero.hi > 0.0);
    CHECK(zero.hi < 1e-5);
}

TEST_CASE("wilson coverage is about 95 percent on a known bernoulli stream") {
    const double p = 0.3;
    const int reps = 2000, per_rep = 500;
    int covered = 0;
    for (int rep = 0; rep < reps; ++rep) {
        TrialRng rng(777, rep);
        std::uint64_t successes = 0;
        for (int i = 0; i < per_rep; ++i) successes += (rng.uniform01() < p);
        const Interval ci = wilson_ci(successes, per_rep, kZ95);
        covered += (p >= ci.lo && p <= ci.hi);
    }
    const double coverage = static_cast<double>(covered) / reps;
    CHECK(coverage > 0.93);
    CHECK(coverage < 0.97);
}

TEST_CASE("least squares recovers a noiseless line") {
    std::vector<double> x{1, 2, 3, 4, 5};
    std::vector<double> y;
    for (double v : x) y.push_back(2.5 - 0.75 * v);
    const LineFit fit = least_squares(x, y);
    CHECK(fit.slope == doctest::Approx(-0.75));
    CHECK(fit.intercept == doctest::Approx(2.5));
    CHECK(fit.slope_stderr == doctest::Approx(0.0).epsilon(1e-9));
}

TEST_CASE("harmonic numbers") {
    CHECK(harmonic_number(1) == doctest::Approx(1.0));
    CHECK(harmonic_number(2) == doctest::Approx(1.5));
    CHECK(harmonic_number(10000) == doctest::Approx(std::log(10000.0) + 0.5772156649 + 1.0 / 20000).epsilon(1e-6));
}

TEST_CASE("parallel kernel matches the serial reference for any thread count") {
    auto kernel = [](std::uint64_t trial) {
        TrialRng rng(55, trial);
        return rng.uniform01() + static_cast<double>(rng.below(17));
    };
    const auto serial = run_trials_serial<double>(10000, kernel);
    const auto par2 = run_trials<double>(10000, 2, kernel);
    const auto par8 = run_trials<double>(10000, 8, kernel);
    CHECK(serial == par2);
    CHECK(serial == par8);
}
