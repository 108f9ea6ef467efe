#include "doctest.h"

#include <algorithm>
#include <map>
#include <set>
#include <vector>

#include "cyclecert/galois_screen.hpp"
#include "cyclecert/polynomial.hpp"
#include "cyclecert/prime.hpp"
#include "cyclecert/rng.hpp"
#include "ddf_oracle.hpp"

using namespace cyclecert;
using cyclecert::testing::oracle_degrees;

TEST_CASE("primality testing spot checks") {
    CHECK(is_prime_u64(2));
    CHECK(is_prime_u64(3));
    CHECK(!is_prime_u64(1));
    CHECK(!is_prime_u64(561));          // Carmichael
    CHECK(is_prime_u64(2147483647ULL));  // 2^31 - 1
    CHECK(!is_prime_u64(2147483647ULL * 17));
    CHECK(is_prime_u64(18446744073709551557ULL));  // largest 64-bit prime
    int count = 0;
    for (std::uint64_t n = 2; n < 1000; ++n) count += is_prime_u64(n);
    CHECK(count == 168);
}

TEST_CASE("prime sampling stays in range and always returns primes") {
    TrialRng rng(12, 0);
    for (int i = 0; i < 200; ++i) {
        const std::uint64_t p = sample_prime_in(1000000, 2000000, rng);
        CHECK(p >= 1000000);
        CHECK(p <= 2000000);
        CHECK(is_prime_u64(p));
    }
    CHECK(sample_prime_in(2, 3, rng) >= 2);
    CHECK_THROWS(sample_prime_in(0, 1, rng));
    CHECK_THROWS(sample_prime_in(24, 28, rng));  // prime-free stretch
}

TEST_CASE("polynomial parsing round trips and rejects bad input") {
    const IntPolynomial p1 = parse_polynomial("x^2+1");
    CHECK(p1.coeffs == std::vector<mpz_class>{1, 0, 1});
    const IntPolynomial p2 = parse_polynomial("x^16 - x - 1");
    CHECK(p2.degree() == 16);
    CHECK(p2.coeffs[0] == -1);
    CHECK(p2.coeffs[1] == -1);
    CHECK(p2.coeffs[16] == 1);
    const IntPolynomial p3 = parse_polynomial("-2*x^3 + 7x - 4");
    CHECK(p3.coeffs == std::vector<mpz_class>{-4, 7, 0, -2});
    const IntPolynomial p4 = parse_polynomial("  3x^2+x^2 - x \t");
    CHECK(p4.coeffs == std::vector<mpz_class>{0, -1, 4});

    CHECK_THROWS_AS(parse_polynomial("x^2 + 0.5"), PolynomialParseError);
    CHECK_THROWS_AS(parse_polynomial(""), PolynomialParseError);
    CHECK_THROWS_AS(parse_polynomial("x - x"), PolynomialParseError);   // zero polynomial
    CHECK_THROWS_AS(parse_polynomial("42"), PolynomialParseError);     // constant
    CHECK_THROWS_AS(parse_polynomial("x^2 ++ 1"), PolynomialParseError);
    CHECK_THROWS_AS(parse_polynomial("y^2"), PolynomialParseError);
    try {
        parse_polynomial("x^2 + 0.5");
    } catch (const PolynomialParseError& e) {
        CHECK(e.pos == 7);  // points at the '.'
        CHECK(std::string(e.what()).find("position") != std::string::npos);
    }
}

TEST_CASE("coefficient-array construction") {
    std::vector<mpz_class> sixteen(17, 0);
    sixteen[0] = -1;
    sixteen[1] = -1;
    sixteen[16] = 1;
    const IntPolynomial p = polynomial_from_coeffs(sixteen);
    CHECK(p.degree() == 16);
    CHECK(p.to_string() == "x^16 - x - 1");
    CHECK_THROWS(polynomial_from_coeffs({}));
    CHECK_THROWS(polynomial_from_coeffs({mpz_class(3)}));
}

TEST_CASE("degree lists on hand examples") {
    const IntPolynomial x2p1 = parse_polynomial("x^2+1");
    const DegreeList d5 = degree_list(x2p1, 5);
    CHECK(d5.usable());
    CHECK(d5.degrees == std::vector<std::uint32_t>{1, 1});
    const DegreeList d3 = degree_list(x2p1, 3);
    CHECK(d3.usable());
    CHECK(d3.degrees == std::vector<std::uint32_t>{2});

    const DegreeList dsq = degree_list(parse_polynomial("x^2"), 7);
    CHECK(dsq.skipped == DegreeList::Skip::not_squarefree);

    const DegreeList ddrop = degree_list(parse_polynomial("7x^2 + x + 1"), 7);
    CHECK(ddrop.skipped == DegreeList::Skip::degree_drop);

    CHECK_THROWS(degree_list(x2p1, 6));  // not prime
}

TEST_CASE("degree lists sum to the degree and match the exhaustive oracle") {
    for (std::uint64_t q : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL}) {
        int checked = 0;
        for (int iter = 0; iter < 400; ++iter) {
            TrialRng rng(9000 + q, iter);
            const std::uint32_t deg = 2 + static_cast<std::uint32_t>(rng.below(5));
            std::vector<mpz_class> coeffs(deg + 1);
            for (auto& c : coeffs) c = static_cast<long>(rng.below(2 * q + 9)) - static_cast<long>(q + 4);
            if (coeffs.back() == 0) coeffs.back() = 1;
            const IntPolynomial p{coeffs};
            const DegreeList dl = degree_list(p, q);
            if (!dl.usable()) continue;
            ++checked;
            std::uint32_t sum = 0;
            for (auto d : dl.degrees) sum += d;
            REQUIRE(sum == deg);
            // oracle on the reduced polynomial
            std::vector<std::uint64_t> f(deg + 1);
            for (std::size_t i = 0; i <= deg; ++i) f[i] = mpz_fdiv_ui(coeffs[i].get_mpz_t(), q);
            // make monic for the oracle
            const std::uint64_t inv = powmod_u64(f.back(), q - 2, q);
            for (auto& c : f) c = mulmod_u64(c, inv, q);
            REQUIRE(dl.degrees == oracle_degrees(f, q));
        }
        CHECK(checked > 100);
    }
}

TEST_CASE("split-prime density for x^2+1 approaches one half") {
    const IntPolynomial p = parse_polynomial("x^2+1");
    TrialRng rng(24601, 0);
    int split = 0, usable = 0;
    const int draws = 4000;
    for (int i = 0; i < draws; ++i) {
        const std::uint64_t q = sample_prime_in(1000, 1000000, rng);
        const DegreeList dl = degree_list(p, q);
        if (!dl.usable()) continue;
        ++usable;
        split += (dl.degrees == std::vector<std::uint32_t>{1, 1});
    }
    const double frac = static_cast<double>(split) / usable;
    const double se = std::sqrt(0.25 / usable);
    CHECK(std::abs(frac - 0.5) < 4.0 * se);
}

TEST_CASE("screen verdicts: x^4+1 is negative with 2 in every sumset") {
    const IntPolynomial p = parse_polynomial("x^4+1");
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const ScreenVerdict v = screen(p, 10, default_prime_range(4), seed);
        CHECK(v.verdict == Verdict::NEGATIVE);
        CHECK(!v.certificate.transitive);
        CHECK(std::find(v.certificate.common_elements.begin(), v.certificate.common_elements.end(),
                        2u) != v.certificate.common_elements.end());
        CHECK(!v.certificate.jordan_applicable);
        for (const auto& dl : v.degree_lists) {
            const bool quartic_split = dl.degrees == std::vector<std::uint32_t>{1, 1, 1, 1} ||
                                       dl.degrees == std::vector<std::uint32_t>{1, 1, 2} ||
                                       dl.degrees == std::vector<std::uint32_t>{2, 2};
            CHECK(quartic_split);
        }
    }
}

TEST_CASE("screen verdicts: x^16 - x - 1 is positive at r=64") {
    const IntPolynomial p = parse_polynomial("x^16 - x - 1");
    int positives = 0;
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const ScreenVerdict v = screen(p, 64, default_prime_range(16), seed);
        positives += (v.verdict == Verdict::POSITIVE);
        for (const auto& dl : v.degree_lists) {
            std::uint32_t sum = 0;
            for (auto d : dl.degrees) sum += d;
            CHECK(sum == 16);
        }
    }
    CHECK(positives >= 9);
}

TEST_CASE("screen is deterministic in (polynomial, r, range, seed)") {
    const IntPolynomial p = parse_polynomial("x^16 - x - 1");
    const ScreenVerdict a = screen(p, 8, default_prime_range(16), 321);
    const ScreenVerdict b = screen(p, 8, default_prime_range(16), 321);
    REQUIRE(a.degree_lists.size() == b.degree_lists.size());
    for (std::size_t i = 0; i < a.degree_lists.size(); ++i) {
        CHECK(a.degree_lists[i].prime == b.degree_lists[i].prime);
        CHECK(a.degree_lists[i].degrees == b.degree_lists[i].degrees);
    }
    CHECK(a.verdict == b.verdict);
}

TEST_CASE("a rational root forces failure of transitivity") {
    // (x - 1)(x^13 - x - 1) = x^14 - x^13 - x^2 + 1:
    // every usable degree list contains a 1
    std::vector<mpz_class> c(15, 0);
    c[14] = 1;
    c[13] = -1;
    c[2] = -1;
    c[0] = 1;
    const IntPolynomial prod = polynomial_from_coeffs(c);
    const ScreenVerdict v = screen(prod, 12, default_prime_range(14), 99);
    CHECK(v.verdict == Verdict::NEGATIVE);
    CHECK(!v.certificate.transitive);
    CHECK(std::find(v.certificate.common_elements.begin(), v.certificate.common_elements.end(), 1u) !=
          v.certificate.common_elements.end());
}

TEST_CASE("screen rejects bad inputs and exhausts on non-squarefree integers") {
    const IntPolynomial p = parse_polynomial("x^2+1");
    CHECK_THROWS(screen(p, 0, default_prime_range(2), 1));
    CHECK_THROWS(screen(p, 4, PrimeRange{10, 5}, 1));
    // x^2 + 2x + 1 = (x+1)^2 is a square over the integers: every reduction skips
    const IntPolynomial square = parse_polynomial("x^2 + 2x + 1");
    CHECK_THROWS_AS(screen(square, 4, default_prime_range(2), 1), std::runtime_error);
}

TEST_CASE("degree-14 screen sees full evidence on a known full-group family") {
    // x^14 - x - 1: transitive evidence accumulates, degree gate applies (14 > 12)
    const IntPolynomial p = parse_polynomial("x^14 - x - 1");
    const ScreenVerdict v = screen(p, 64, default_prime_range(14), 7);
    CHECK(v.certificate.transitive);
    CHECK(v.certificate.odd_class_present);
    CHECK(v.certificate.jordan_applicable);
}
