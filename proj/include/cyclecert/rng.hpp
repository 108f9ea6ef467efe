#pragma once

#include <cstdint>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace cyclecert {

// SplitMix64 avalanche step.  This is the documented mixing function used to
// derive independent per-trial substreams from (master seed, trial index):
// identical inputs give identical streams on every platform and thread count.
constexpr std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t salt) {
    return splitmix64(seed ^ splitmix64(salt));
}

// xoshiro256++ seeded through a SplitMix64 chain.  Self-contained so that a
// fixed (seed, trial) pair produces the same draws under every compiler.
class TrialRng {
public:
    TrialRng(std::uint64_t seed, std::uint64_t trial) {
        std::uint64_t x = mix_seed(seed, trial);
        for (auto& w : state_) {
            x = splitmix64(x);
            w = x;
        }
        if ((state_[0] | state_[1] | state_[2] | state_[3]) == 0)
            state_[0] = 0x9e3779b97f4a7c15ULL;
    }

    std::uint64_t next() {
        const std::uint64_t result = rotl(state_[0] + state_[3], 23) + state_[0];
        const std::uint64_t t = state_[1] << 17;
        state_[2] ^= state_[0];
        state_[3] ^= state_[1];
        state_[1] ^= state_[2];
        state_[0] ^= state_[3];
        state_[2] ^= t;
        state_[3] = rotl(state_[3], 45);
        return result;
    }

    // Uniform in [0, 1) with 53 random bits.
    double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    // Unbiased uniform in [0, n) by rejection.
    std::uint64_t below(std::uint64_t n) {
        if (n == 0) throw std::invalid_argument("TrialRng::below: n must be positive");
        const std::uint64_t limit =
            std::numeric_limits<std::uint64_t>::max() -
            std::numeric_limits<std::uint64_t>::max() % n;
        std::uint64_t v;
        do {
            v = next();
        } while (v >= limit);
        return v % n;
    }

private:
    static constexpr std::uint64_t rotl(std::uint64_t x, int k) {
        return (x << k) | (x >> (64 - k));
    }
    std::uint64_t state_[4];
};

// Poisson draw by CDF inversion given a precomputed exp(-mean).  One uniform
// per draw; suitable for the small means used throughout.
inline std::uint32_t poisson_inversion(TrialRng& rng, double mean, double exp_neg_mean) {
    const double u = rng.uniform01();
    double p = exp_neg_mean;
    double cdf = p;
    std::uint32_t k = 0;
    // cap guards against pathological rounding; the truncated mass is far
    // below double resolution for the means in use
    while (u > cdf && k < 2048) {
        ++k;
        p *= mean / k;
        cdf += p;
    }
    return k;
}

inline std::uint32_t poisson_draw(TrialRng& rng, double mean) {
    if (!(mean >= 0.0)) throw std::invalid_argument("poisson_draw: mean must be nonnegative");
    std::uint32_t total = 0;
    // split large means into chunks of 10 (sums of independent Poissons)
    while (mean > 10.0) {
        total += poisson_inversion(rng, 10.0, std::exp(-10.0));
        mean -= 10.0;
    }
    return total + poisson_inversion(rng, mean, std::exp(-mean));
}

}  // namespace cyclecert
