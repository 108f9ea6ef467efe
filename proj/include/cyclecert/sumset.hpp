#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "cyclecert/cycle_type.hpp"

namespace cyclecert {

// Dense indicator over {0, ..., window} of attainable sub-multiset sums.
// Bit 0 is always set (empty selection).
class SumsetMask {
public:
    explicit SumsetMask(std::size_t window);

    std::size_t window() const { return window_; }

    bool test(std::size_t j) const {
        return j <= window_ && (words_[j >> 6] >> (j & 63)) & 1u;
    }

    // Adds `multiplicity` copies of `part` to the underlying multiset,
    // updating reachable sums.  Multiplicities are decomposed into binary
    // chunks (part, 2*part, 4*part, ...) so the cost is O(log multiplicity)
    // shift-OR passes; copies that cannot fit below the window are dropped.
    void add_part(std::size_t part, std::uint64_t multiplicity = 1);

    void intersect_with(const SumsetMask& other);
    void clear_bit(std::size_t j);

    bool any_in(std::size_t lo, std::size_t hi) const;
    std::size_t count_in(std::size_t lo, std::size_t hi) const;
    // Largest set bit in [lo, hi], or window()+1 when none.
    std::size_t max_in(std::size_t lo, std::size_t hi) const;
    std::vector<std::size_t> set_bits(std::size_t lo, std::size_t hi) const;

    // bit j == bit (window - j) for all j; holds for masks of full cycle types
    bool symmetric() const;

    bool operator==(const SumsetMask& other) const = default;

private:
    void shift_or(std::size_t k);

    std::size_t window_ = 0;
    std::vector<std::uint64_t> words_;
};

// Sumset of all cycle lengths with multiplicity; window = ct.n.
SumsetMask sumset_of_cycle_type(const CycleType& ct);

// Sumset of the multiset with X_k copies of k, truncated to {0..window}.
// Exact for the window: parts larger than it cannot contribute to sums
// inside it.  Requires window <= mv.limit.
SumsetMask sumset_of_multiplicities(const MultiplicityVector& mv, std::size_t window);

// AND of the masks' bit vectors; with exclude_endpoints, bits 0 and window
// are cleared before reporting.  All masks must share a window.
std::vector<std::size_t> intersect_nontrivial(std::span<const SumsetMask> masks,
                                              bool exclude_endpoints = true);

// Exhaustive enumeration oracle over all sub-multisets.  Total weight <= 24.
std::vector<std::uint32_t> brute_force_sumset(const std::vector<std::uint32_t>& parts);

}  // namespace cyclecert
