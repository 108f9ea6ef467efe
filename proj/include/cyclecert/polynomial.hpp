#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace cyclecert {

// Integer polynomial, constant term first, leading coefficient nonzero,
// degree >= 1.
struct IntPolynomial {
    std::vector<mpz_class> coeffs;

    std::uint32_t degree() const { return static_cast<std::uint32_t>(coeffs.size() - 1); }
    void validate() const;
    std::string to_string() const;
};

struct PolynomialParseError : std::runtime_error {
    PolynomialParseError(std::size_t position, const std::string& message)
        : std::runtime_error("syntax error at position " + std::to_string(position) + ": " +
                             message),
          pos(position) {}
    std::size_t pos;
};

// Accepts surface syntax like "x^16 - x - 1" or "3*x^2 + 2x - 5".
// Coefficients must be integers; the zero polynomial and constants are
// rejected.
IntPolynomial parse_polynomial(std::string_view text);

IntPolynomial polynomial_from_coeffs(std::vector<mpz_class> ascending_coeffs);

// Factor-degree data of p mod q.
struct DegreeList {
    std::uint64_t prime = 0;
    std::vector<std::uint32_t> degrees;  // ascending; sums to deg p when not skipped
    enum class Skip { none, not_squarefree, degree_drop } skipped = Skip::none;

    bool usable() const { return skipped == Skip::none; }
};

// Distinct-degree factorization of p mod q: for d = 1, 2, ... the gcd with
// x^{q^d} - x splits off the product of all irreducible factors of degree d,
// contributing (component degree)/d copies of d.  Reductions that drop
// degree or are not squarefree are reported as skipped, not errors.
DegreeList degree_list(const IntPolynomial& p, std::uint64_t q);

}  // namespace cyclecert
