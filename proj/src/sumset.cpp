#include "cyclecert/sumset.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <stdexcept>

namespace cyclecert {

SumsetMask::SumsetMask(std::size_t window)
    : window_(window), words_((window + 64) / 64, 0) {
    words_[0] = 1;  // empty selection sums to 0
}

void SumsetMask::shift_or(std::size_t k) {
    if (k == 0 || k > window_) return;
    const std::size_t word_shift = k >> 6;
    const unsigned bit_shift = static_cast<unsigned>(k & 63);
    // descending so each destination reads pre-pass source words
    for (std::size_t i = words_.size(); i-- > word_shift;) {
        std::uint64_t v = words_[i - word_shift] << bit_shift;
        if (bit_shift != 0 && i > word_shift)
            v |= words_[i - word_shift - 1] >> (64 - bit_shift);
        words_[i] |= v;
    }
    // mask off bits beyond the window
    const unsigned tail = static_cast<unsigned>((window_ + 1) & 63);
    if (tail != 0) words_.back() &= (~0ULL >> (64 - tail));
}

void SumsetMask::add_part(std::size_t part, std::uint64_t multiplicity) {
    if (part == 0) throw std::invalid_argument("SumsetMask::add_part: part must be positive");
    if (part > window_ || multiplicity == 0) return;
    std::uint64_t remaining = std::min<std::uint64_t>(multiplicity, window_ / part);
    std::uint64_t chunk = 1;
    while (remaining > 0) {
        const std::uint64_t take = std::min(chunk, remaining);
        shift_or(part * take);
        remaining -= take;
        chunk <<= 1;
    }
}

void SumsetMask::intersect_with(const SumsetMask& other) {
    if (other.window_ != window_)
        throw std::invalid_argument("SumsetMask::intersect_with: window mismatch");
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
}

void SumsetMask::clear_bit(std::size_t j) {
    if (j <= window_) words_[j >> 6] &= ~(1ULL << (j & 63));
}

bool SumsetMask::any_in(std::size_t lo, std::size_t hi) const {
    hi = std::min(hi, window_);
    if (lo > hi) return false;
    for (std::size_t w = lo >> 6; w <= hi >> 6; ++w) {
        std::uint64_t word = words_[w];
        const std::size_t base = w << 6;
        if (base < lo) word &= ~0ULL << (lo - base);
        if (base + 63 > hi) word &= ~0ULL >> (63 - (hi - base));
        if (word != 0) return true;
    }
    return false;
}

std::size_t SumsetMask::count_in(std::size_t lo, std::size_t hi) const {
    hi = std::min(hi, window_);
    if (lo > hi) return 0;
    std::size_t total = 0;
    for (std::size_t w = lo >> 6; w <= hi >> 6; ++w) {
        std::uint64_t word = words_[w];
        const std::size_t base = w << 6;
        if (base < lo) word &= ~0ULL << (lo - base);
        if (base + 63 > hi) word &= ~0ULL >> (63 - (hi - base));
        total += static_cast<std::size_t>(std::popcount(word));
    }
    return total;
}

std::size_t SumsetMask::max_in(std::size_t lo, std::size_t hi) const {
    hi = std::min(hi, window_);
    if (lo > hi) return window_ + 1;
    for (std::size_t j = hi + 1; j-- > lo;)
        if (test(j)) return j;
    return window_ + 1;
}

std::vector<std::size_t> SumsetMask::set_bits(std::size_t lo, std::size_t hi) const {
    std::vector<std::size_t> out;
    hi = std::min(hi, window_);
    for (std::size_t j = lo; j <= hi; ++j)
        if (test(j)) out.push_back(j);
    return out;
}

bool SumsetMask::symmetric() const {
    for (std::size_t j = 0; j <= window_ / 2; ++j)
        if (test(j) != test(window_ - j)) return false;
    return true;
}

SumsetMask sumset_of_cycle_type(const CycleType& ct) {
    ct.validate();
    SumsetMask mask(ct.n);
    for (const auto& [len, mult] : ct.counts) mask.add_part(len, mult);
    return mask;
}

SumsetMask sumset_of_multiplicities(const MultiplicityVector& mv, std::size_t window) {
    if (window > mv.limit)
        throw std::invalid_argument("sumset_of_multiplicities: window exceeds vector limit");
    SumsetMask mask(window);
    for (std::size_t k = 1; k <= window; ++k) {
        const std::uint32_t count = mv.x[k - 1];
        if (count > 0) mask.add_part(k, count);
    }
    return mask;
}

std::vector<std::size_t> intersect_nontrivial(std::span<const SumsetMask> masks,
                                              bool exclude_endpoints) {
    if (masks.empty()) throw std::invalid_argument("intersect_nontrivial: no masks");
    SumsetMask acc = masks[0];
    for (std::size_t i = 1; i < masks.size(); ++i) acc.intersect_with(masks[i]);
    if (exclude_endpoints) {
        acc.clear_bit(0);
        acc.clear_bit(acc.window());
    }
    return acc.set_bits(0, acc.window());
}

std::vector<std::uint32_t> brute_force_sumset(const std::vector<std::uint32_t>& parts) {
    const std::uint64_t total = std::accumulate(parts.begin(), parts.end(), 0ULL);
    if (total > 24) throw std::invalid_argument("brute_force_sumset: total weight exceeds 24");
    // group into (value, multiplicity) and walk every selection count
    std::map<std::uint32_t, std::uint32_t> grouped;
    for (std::uint32_t p : parts) {
        if (p == 0) throw std::invalid_argument("brute_force_sumset: parts must be positive");
        ++grouped[p];
    }
    std::vector<char> reachable(total + 1, 0);
    reachable[0] = 1;
    auto items = std::vector<std::pair<std::uint32_t, std::uint32_t>>(grouped.begin(), grouped.end());
    // depth-first over per-value counts
    auto recurse = [&](auto&& self, std::size_t idx, std::uint32_t sum) -> void {
        if (idx == items.size()) {
            reachable[sum] = 1;
            return;
        }
        const auto [value, mult] = items[idx];
        for (std::uint32_t take = 0; take <= mult; ++take)
            self(self, idx + 1, sum + value * take);
    };
    recurse(recurse, 0, 0);
    std::vector<std::uint32_t> out;
    for (std::uint32_t s = 0; s <= total; ++s)
        if (reachable[s]) out.push_back(s);
    return out;
}

}  // namespace cyclecert
