#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cyclecert/invariable.hpp"
#include "cyclecert/polynomial.hpp"

namespace cyclecert {

enum class Verdict { POSITIVE, NEGATIVE, UNSUPPORTED_DEGREE };

std::string to_string(Verdict v);

struct ScreenVerdict {
    Verdict verdict = Verdict::NEGATIVE;
    std::vector<DegreeList> degree_lists;  // the r usable reductions, in draw order
    Certificate certificate;
    std::uint32_t primes_used = 0;
    std::uint32_t primes_skipped = 0;
    std::uint64_t seed = 0;
};

struct PrimeRange {
    std::uint64_t lo = 0;
    std::uint64_t hi = 0;
};

// [n^2, 100 n^2]: large enough that degenerate reductions are rare, small
// enough for single-word residue arithmetic.
PrimeRange default_prime_range(std::uint32_t degree);

// Full screening run: samples primes uniformly from the range, collects r
// usable factor-degree lists (resampling on skipped reductions, with a cap),
// treats each as a cycle type of degree deg p, and evaluates the evidence.
// POSITIVE requires transitivity, an odd class, a long prime cycle, and
// deg p > 12; conclusively missing evidence gives NEGATIVE; full evidence at
// deg p <= 12 gives UNSUPPORTED_DEGREE.
ScreenVerdict screen(const IntPolynomial& p, std::uint32_t r, PrimeRange range,
                     std::uint64_t seed);

}  // namespace cyclecert
