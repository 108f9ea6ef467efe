#pragma once

#include <cstdint>
#include <map>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace cyclecert {

// Multiset of cycle lengths of a permutation of [n]; determines its
// conjugacy class.  counts[k] = number of cycles of length k.
struct CycleType {
    std::uint32_t n = 0;
    std::map<std::uint32_t, std::uint32_t> counts;

    CycleType() = default;
    CycleType(std::uint32_t total, std::map<std::uint32_t, std::uint32_t> c)
        : n(total), counts(std::move(c)) {
        validate();
    }

    void validate() const {
        std::uint64_t sum = 0;
        for (const auto& [len, mult] : counts) {
            if (len < 1 || len > n) throw std::invalid_argument("CycleType: length out of [1, n]");
            if (mult < 1) throw std::invalid_argument("CycleType: multiplicity must be >= 1");
            sum += static_cast<std::uint64_t>(len) * mult;
        }
        if (sum != n) throw std::invalid_argument("CycleType: lengths do not sum to n");
    }

    std::uint32_t cycle_count() const {
        std::uint32_t c = 0;
        for (const auto& [len, mult] : counts) c += mult;
        return c;
    }

    bool operator==(const CycleType& other) const = default;
};

enum class Parity { even, odd };

// A permutation is odd iff n minus its number of cycles is odd.
inline Parity parity(const CycleType& ct) {
    return ((ct.n - ct.cycle_count()) % 2 == 0) ? Parity::even : Parity::odd;
}

// Truncated vector of multiplicities (X_1, ..., X_limit), one count per size.
struct MultiplicityVector {
    std::uint32_t limit = 0;
    std::vector<std::uint32_t> x;  // x[k-1] = X_k

    MultiplicityVector() = default;
    explicit MultiplicityVector(std::uint32_t lim) : limit(lim), x(lim, 0) {}

    std::uint32_t at(std::uint32_t k) const { return x.at(k - 1); }
    void set(std::uint32_t k, std::uint32_t v) { x.at(k - 1) = v; }
};

}  // namespace cyclecert
