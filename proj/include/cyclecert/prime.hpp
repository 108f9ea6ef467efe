#pragma once

#include <cstdint>
#include <stdexcept>

#include "cyclecert/rng.hpp"

namespace cyclecert {

inline std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>((static_cast<__uint128_t>(a) * b) % m);
}

inline std::uint64_t powmod_u64(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
    std::uint64_t result = 1;
    base %= m;
    while (exp > 0) {
        if (exp & 1) result = mulmod_u64(result, base, m);
        base = mulmod_u64(base, base, m);
        exp >>= 1;
    }
    return result;
}

// Miller-Rabin with the 12-base set that is exact for all 64-bit integers.
inline bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        if (n == p) return true;
        if (n % p == 0) return false;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        std::uint64_t x = powmod_u64(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int r = 1; r < s; ++r) {
            x = mulmod_u64(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

// Uniform prime in [lo, hi] by rejection.  Throws when no prime turns up
// within the attempt budget (e.g. a prime-free range).
inline std::uint64_t sample_prime_in(std::uint64_t lo, std::uint64_t hi, TrialRng& rng) {
    if (lo < 2 || hi <= lo) throw std::invalid_argument("sample_prime_in: need hi > lo >= 2");
    const std::uint64_t span = hi - lo + 1;
    constexpr int kMaxAttempts = 8192;
    for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
        const std::uint64_t candidate = lo + rng.below(span);
        if (is_prime_u64(candidate)) return candidate;
    }
    throw std::runtime_error("sample_prime_in: no prime found in range after bounded attempts");
}

}  // namespace cyclecert
