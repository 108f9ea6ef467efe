#include "doctest.h"

#include <cmath>
#include <map>
#include <vector>

#include "cyclecert/invariable.hpp"
#include "cyclecert/perm_model.hpp"
#include "cyclecert/rng.hpp"
#include "cyclecert/sumset.hpp"

using namespace cyclecert;

namespace {

CycleType ct_of(std::uint32_t n, std::initializer_list<std::pair<std::uint32_t, std::uint32_t>> items) {
    std::map<std::uint32_t, std::uint32_t> counts;
    for (auto [k, m] : items) counts[k] = m;
    return CycleType(n, counts);
}

}  // namespace

TEST_CASE("transitivity certificates on hand examples") {
    std::vector<CycleType> good{ct_of(7, {{3, 1}, {4, 1}}), ct_of(7, {{2, 1}, {5, 1}})};
    const Certificate c1 = invariably_transitive(good);
    CHECK(c1.transitive);
    CHECK(c1.common_elements.empty());

    std::vector<CycleType> bad{ct_of(4, {{2, 2}}), ct_of(4, {{2, 2}})};
    const Certificate c2 = invariably_transitive(bad);
    CHECK(!c2.transitive);
    CHECK(c2.common_elements == std::vector<std::uint32_t>{2});

    std::vector<CycleType> single{ct_of(9, {{9, 1}})};
    CHECK(invariably_transitive(single).transitive);

    std::vector<CycleType> mixed{ct_of(4, {{2, 2}}), ct_of(5, {{5, 1}})};
    CHECK_THROWS(invariably_transitive(mixed));
    CHECK_THROWS(invariably_transitive(std::span<const CycleType>{}));
}

TEST_CASE("full certificates: witness primes, parity, degree gate") {
    std::vector<CycleType> with11{ct_of(16, {{11, 1}, {5, 1}}), ct_of(16, {{16, 1}})};
    const Certificate c = full_certificate(with11);
    CHECK(c.jordan_applicable);  // 16 > 12
    CHECK(c.large_prime_cycle_present);
    REQUIRE(c.witness_prime.has_value());
    CHECK(*c.witness_prime == 11);

    // n = 8: the window (4, 3] is empty, and the degree gate is off
    std::vector<CycleType> small{ct_of(8, {{7, 1}, {1, 1}}), ct_of(8, {{5, 1}, {3, 1}})};
    const Certificate cs = full_certificate(small);
    CHECK(!cs.jordan_applicable);
    CHECK(!cs.large_prime_cycle_present);

    // all-even list: no odd class present
    std::vector<CycleType> evens{ct_of(6, {{3, 2}}), ct_of(6, {{1, 2}, {2, 2}})};
    CHECK(!full_certificate(evens).odd_class_present);
    std::vector<CycleType> one_odd{ct_of(6, {{2, 1}, {1, 4}})};
    CHECK(full_certificate(one_odd).odd_class_present);
}

TEST_CASE("witness prime lies in the (n/2, n-5] window") {
    std::vector<CycleType> cts{ct_of(26, {{17, 1}, {9, 1}})};
    const Certificate c = full_certificate(cts);
    REQUIRE(c.witness_prime.has_value());
    CHECK(*c.witness_prime == 17);

    // 23 is prime but 23 > 26 - 5 = 21: excluded
    std::vector<CycleType> high{ct_of(26, {{23, 1}, {3, 1}})};
    CHECK(!full_certificate(high).large_prime_cycle_present);

    // 13 is prime but 13 <= 26/2: excluded
    std::vector<CycleType> low{ct_of(26, {{13, 2}})};
    CHECK(!full_certificate(low).large_prime_cycle_present);
}

TEST_CASE("exact q values") {
    CHECK(exact_q(1, 1) == 1);
    CHECK(exact_q(1, 5) == 1);
    CHECK(exact_q(3, 1) == mpq_class(1, 3));
    CHECK(exact_q(3, 2) == mpq_class(5, 9));
    for (std::uint32_t r = 1; r <= 4; ++r) {
        mpq_class expected = 1;
        mpq_class half_pow = 1;
        for (std::uint32_t i = 0; i < r; ++i) half_pow *= mpq_class(1, 2);
        expected -= half_pow;
        CHECK(exact_q(2, r) == expected);  // q(2, r) = 1 - 2^{-r}
    }
    CHECK_THROWS(exact_q(13, 1));
    CHECK_THROWS(exact_q(3, 0));
}

TEST_CASE("exact q at r=1 equals the direct mass of trivial-sumset types") {
    for (std::uint32_t n = 2; n <= 10; ++n) {
        mpq_class direct = 0;
        for (const auto& e : enumerate_partitions(n).entries) {
            const SumsetMask mask = sumset_of_cycle_type(e.type);
            if (!mask.any_in(1, n - 1)) direct += e.probability;
        }
        CHECK(exact_q(n, 1) == direct);
        // only the n-cycle has a trivial sumset, so q(n, 1) = 1/n
        CHECK(direct == mpq_class(1, n));
    }
}

TEST_CASE("estimated q agrees with the exact oracle and is monotone in r") {
    for (std::uint32_t n : {4u, 7u, 10u}) {
        const auto estimates = estimate_q(n, 4, 20000, 9001, 2);
        REQUIRE(estimates.size() == 4);
        double prev = 0.0;
        for (const auto& qe : estimates) {
            CHECK(qe.estimate >= prev);
            prev = qe.estimate;
            const double exact = exact_q(n, qe.r).get_d();
            // z = 3.29 on the Wilson interval: ~0.1% two-sided
            const Interval wide = wilson_ci(qe.successes, qe.trials, 3.29);
            CHECK(exact >= wide.lo);
            CHECK(exact <= wide.hi);
        }
    }
}

TEST_CASE("per-trial success indicators are nondecreasing in r under prefix coupling") {
    const std::uint32_t n = 9, r_max = 5;
    for (std::uint64_t trial = 0; trial < 2000; ++trial) {
        TrialRng rng(4242, trial);
        std::vector<CycleType> cts;
        for (std::uint32_t r = 0; r < r_max; ++r) cts.push_back(sample_cycle_type(n, rng));
        bool prev = false;
        for (std::uint32_t r = 1; r <= r_max; ++r) {
            const bool success =
                invariably_transitive(std::span<const CycleType>(cts.data(), r)).transitive;
            if (prev) CHECK(success);
            prev = success;
        }
    }
}

TEST_CASE("invariant-set counts on hand examples") {
    CHECK(count_invariant_sets(ct_of(3, {{1, 3}}), 2) == 3);
    CHECK(count_invariant_sets(ct_of(5, {{5, 1}}), 2) == 0);
    CHECK(count_invariant_sets(ct_of(8, {{2, 2}, {4, 1}}), 4) == 2);
    CHECK(count_invariant_sets(ct_of(8, {{2, 2}, {4, 1}}), 0) == 1);
    CHECK(count_invariant_sets(ct_of(8, {{2, 2}, {4, 1}}), 8) == 1);
    CHECK_THROWS(count_invariant_sets(ct_of(3, {{1, 3}}), 4));
}

TEST_CASE("invariant-set counts: complement symmetry and total") {
    for (int iter = 0; iter < 100; ++iter) {
        TrialRng rng(606, iter);
        const CycleType ct = sample_cycle_type(14, rng);
        mpz_class total = 0;
        for (std::uint32_t k = 0; k <= 14; ++k) {
            const mpz_class c = count_invariant_sets(ct, k);
            CHECK(c == count_invariant_sets(ct, 14 - k));
            total += c;
        }
        mpz_class expected = 1;
        expected <<= ct.cycle_count();  // prod_j 2^{m_j}
        CHECK(total == expected);
    }
}

TEST_CASE("expected number of invariant k-sets is exactly 1") {
    for (std::uint32_t n : {4u, 8u, 10u}) {
        for (std::uint32_t k = 1; k < n; ++k) CHECK(exact_mean_invariant_sets(n, k) == 1);
    }
}

TEST_CASE("monte carlo mean of invariant-set counts is 1 within 3 standard errors") {
    const MeanEstimate est = mean_invariant_sets(12, 4, 50000, 31415, 2);
    REQUIRE(est.stderr_ > 0.0);
    CHECK(std::abs(est.mean - 1.0) < 3.0 * est.stderr_);
    CHECK_THROWS(mean_invariant_sets(12, 0, 100, 1));
    CHECK_THROWS(mean_invariant_sets(12, 12, 100, 1));
}

TEST_CASE("total variation against the product-poisson law") {
    const TvReport r62 = tv_distance_exact(6, 2);
    const TvReport r122 = tv_distance_exact(12, 2);
    const TvReport r202 = tv_distance_exact(20, 2);
    for (const auto& r : {r62, r122, r202}) {
        CHECK(r.tv >= 0.0);
        CHECK(r.tv <= 1.0);
        CHECK(r.off_support_mass >= 0.0);
    }
    CHECK(r122.tv < r62.tv);
    CHECK(r202.tv < r122.tv);
    CHECK_THROWS(tv_distance_exact(21, 2));
    CHECK_THROWS(tv_distance_exact(10, 0));
}
