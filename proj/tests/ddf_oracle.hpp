#pragma once

// Exhaustive factor-degree oracle for small polynomials over F_q: trial
// division by every monic polynomial of ascending degree.  Test-only; kept
// independent of the distinct-degree factorization it checks.

#include <algorithm>
#include <cstdint>
#include <vector>

#include "cyclecert/prime.hpp"

namespace cyclecert::testing {

inline std::vector<std::uint32_t> oracle_degrees(std::vector<std::uint64_t> f, std::uint64_t q) {
    auto poly_rem = [&](std::vector<std::uint64_t> a, const std::vector<std::uint64_t>& d) {
        while (a.size() >= d.size() && !a.empty()) {
            const std::uint64_t lead = a.back();
            if (lead != 0) {
                const std::size_t shift = a.size() - d.size();
                for (std::size_t i = 0; i < d.size(); ++i)
                    a[i + shift] = (a[i + shift] + q - mulmod_u64(lead, d[i], q)) % q;
            }
            a.pop_back();
            while (!a.empty() && a.back() == 0) a.pop_back();
        }
        return a;
    };
    auto poly_div = [&](std::vector<std::uint64_t> a, const std::vector<std::uint64_t>& d) {
        std::vector<std::uint64_t> quo(a.size() - d.size() + 1, 0);
        while (a.size() >= d.size() && !a.empty()) {
            const std::uint64_t lead = a.back();
            const std::size_t shift = a.size() - d.size();
            quo[shift] = lead;
            if (lead != 0)
                for (std::size_t i = 0; i < d.size(); ++i)
                    a[i + shift] = (a[i + shift] + q - mulmod_u64(lead, d[i], q)) % q;
            a.pop_back();
            while (!a.empty() && a.back() == 0) a.pop_back();
        }
        return quo;
    };

    std::vector<std::uint32_t> out;
    bool progress = true;
    while (f.size() > 1 && progress) {
        progress = false;
        for (std::uint32_t d = 1; 2 * d <= static_cast<std::uint32_t>(f.size() - 1) && !progress;
             ++d) {
            std::uint64_t total = 1;
            for (std::uint32_t i = 0; i < d; ++i) total *= q;
            for (std::uint64_t code = 0; code < total; ++code) {
                std::vector<std::uint64_t> candidate(d + 1, 0);
                std::uint64_t c = code;
                for (std::uint32_t i = 0; i < d; ++i) {
                    candidate[i] = c % q;
                    c /= q;
                }
                candidate[d] = 1;
                if (poly_rem(f, candidate).empty()) {
                    out.push_back(d);
                    f = poly_div(f, candidate);
                    progress = true;
                    break;
                }
            }
        }
        if (!progress && f.size() > 1) {
            out.push_back(static_cast<std::uint32_t>(f.size() - 1));  // irreducible remainder
            break;
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace cyclecert::testing
