#include "cyclecert/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <stdexcept>

#include "cyclecert/prime.hpp"

namespace cyclecert {

void IntPolynomial::validate() const {
    if (coeffs.size() < 2) throw std::invalid_argument("IntPolynomial: degree must be >= 1");
    if (coeffs.back() == 0) throw std::invalid_argument("IntPolynomial: leading coefficient is zero");
}

std::string IntPolynomial::to_string() const {
    std::string out;
    for (std::size_t i = coeffs.size(); i-- > 0;) {
        const mpz_class& c = coeffs[i];
        if (c == 0) continue;
        const bool negative = c < 0;
        mpz_class mag = abs(c);
        if (out.empty()) {
            if (negative) out += "-";
        } else {
            out += negative ? " - " : " + ";
        }
        if (i == 0 || mag != 1) out += mag.get_str();
        if (i >= 1) {
            if (mag != 1) out += "*";
            out += "x";
            if (i >= 2) out += "^" + std::to_string(i);
        }
    }
    return out.empty() ? "0" : out;
}

IntPolynomial polynomial_from_coeffs(std::vector<mpz_class> ascending_coeffs) {
    while (!ascending_coeffs.empty() && ascending_coeffs.back() == 0) ascending_coeffs.pop_back();
    if (ascending_coeffs.empty())
        throw std::invalid_argument("polynomial_from_coeffs: zero polynomial rejected");
    IntPolynomial p{std::move(ascending_coeffs)};
    p.validate();
    return p;
}

namespace {

struct Parser {
    std::string_view text;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }
    bool done() {
        skip_ws();
        return pos >= text.size();
    }
    char peek() { return text[pos]; }

    mpz_class read_integer() {
        skip_ws();
        const std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == start) throw PolynomialParseError(pos, "expected an integer");
        if (pos < text.size() && text[pos] == '.')
            throw PolynomialParseError(pos, "non-integer coefficient");
        return mpz_class(std::string(text.substr(start, pos - start)), 10);
    }

    // term := integer ['*'] [x ['^' integer]] | x ['^' integer]
    void read_term(int sign, std::map<std::uint64_t, mpz_class>& acc) {
        skip_ws();
        if (pos >= text.size()) throw PolynomialParseError(pos, "expected a term");
        mpz_class coeff = 1;
        bool saw_coeff = false;
        if (std::isdigit(static_cast<unsigned char>(peek()))) {
            coeff = read_integer();
            saw_coeff = true;
            skip_ws();
            if (pos < text.size() && peek() == '*') {
                ++pos;
                skip_ws();
                if (pos >= text.size() || peek() != 'x')
                    throw PolynomialParseError(pos, "expected 'x' after '*'");
            }
        }
        std::uint64_t exponent = 0;
        skip_ws();
        if (pos < text.size() && peek() == 'x') {
            ++pos;
            exponent = 1;
            skip_ws();
            if (pos < text.size() && peek() == '^') {
                ++pos;
                const mpz_class e = read_integer();
                if (!e.fits_ulong_p()) throw PolynomialParseError(pos, "exponent too large");
                exponent = e.get_ui();
            }
        } else if (!saw_coeff) {
            throw PolynomialParseError(pos, "expected a coefficient or 'x'");
        }
        acc[exponent] += sign * coeff;
    }
};

}  // namespace

IntPolynomial parse_polynomial(std::string_view text) {
    Parser parser{text};
    std::map<std::uint64_t, mpz_class> acc;
    if (parser.done()) throw PolynomialParseError(0, "empty input");
    int sign = 1;
    parser.skip_ws();
    if (parser.peek() == '+' || parser.peek() == '-') {
        sign = (parser.peek() == '-') ? -1 : 1;
        ++parser.pos;
    }
    parser.read_term(sign, acc);
    while (!parser.done()) {
        const char op = parser.peek();
        if (op != '+' && op != '-')
            throw PolynomialParseError(parser.pos, std::string("unexpected character '") + op + "'");
        ++parser.pos;
        parser.read_term(op == '-' ? -1 : 1, acc);
    }
    std::uint64_t max_exp = 0;
    for (const auto& [e, c] : acc)
        if (c != 0) max_exp = std::max(max_exp, e);
    if (max_exp > 1'000'000) throw PolynomialParseError(0, "degree too large");
    std::vector<mpz_class> coeffs(max_exp + 1, mpz_class(0));
    for (const auto& [e, c] : acc)
        if (c != 0) coeffs[e] = c;
    while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
    if (coeffs.empty()) throw PolynomialParseError(0, "zero polynomial rejected");
    if (coeffs.size() < 2) throw PolynomialParseError(0, "constant polynomial rejected (degree must be >= 1)");
    return IntPolynomial{std::move(coeffs)};
}

// ---------------------------------------------------------------------------
// arithmetic over F_q: polynomials as ascending coefficient vectors, trimmed

namespace fq {

using Poly = std::vector<std::uint64_t>;

void trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

int deg(const Poly& a) { return static_cast<int>(a.size()) - 1; }

Poly mul(const Poly& a, const Poly& b, std::uint64_t q) {
    if (a.empty() || b.empty()) return {};
    Poly c(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            c[i + j] = (c[i + j] + static_cast<__uint128_t>(a[i]) * b[j]) % q;
    }
    trim(c);
    return c;
}

// remainder of a by monic f
Poly rem(Poly a, const Poly& f, std::uint64_t q) {
    trim(a);
    const int df = deg(f);
    while (deg(a) >= df) {
        const std::uint64_t factor = a.back();
        const std::size_t shift = a.size() - f.size();
        if (factor != 0)
            for (std::size_t i = 0; i < f.size(); ++i) {
                const std::uint64_t sub = mulmod_u64(factor, f[i], q);
                std::uint64_t& slot = a[i + shift];
                slot = (slot + q - sub) % q;
            }
        a.pop_back();
        trim(a);
    }
    return a;
}

// quotient of a by monic divisor g (exact division use)
Poly quot(Poly a, const Poly& g, std::uint64_t q) {
    trim(a);
    const int dg = deg(g);
    if (deg(a) < dg) return {};
    Poly result(a.size() - g.size() + 1, 0);
    while (deg(a) >= dg) {
        const std::uint64_t factor = a.back();
        const std::size_t shift = a.size() - g.size();
        result[shift] = factor;
        if (factor != 0)
            for (std::size_t i = 0; i < g.size(); ++i) {
                const std::uint64_t sub = mulmod_u64(factor, g[i], q);
                std::uint64_t& slot = a[i + shift];
                slot = (slot + q - sub) % q;
            }
        a.pop_back();
        trim(a);
    }
    trim(result);
    return result;
}

Poly make_monic(Poly a, std::uint64_t q) {
    trim(a);
    if (a.empty() || a.back() == 1) return a;
    const std::uint64_t inv = powmod_u64(a.back(), q - 2, q);
    for (auto& c : a) c = mulmod_u64(c, inv, q);
    return a;
}

Poly gcd(Poly a, Poly b, std::uint64_t q) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        Poly r = rem(a, make_monic(b, q), q);
        a = std::move(b);
        b = std::move(r);
    }
    return make_monic(std::move(a), q);
}

Poly derivative(const Poly& a, std::uint64_t q) {
    Poly d;
    for (std::size_t i = 1; i < a.size(); ++i)
        d.push_back(mulmod_u64(a[i], static_cast<std::uint64_t>(i % q), q));
    trim(d);
    return d;
}

// h^e mod f for a 64-bit exponent
Poly powmod(Poly h, std::uint64_t e, const Poly& f, std::uint64_t q) {
    Poly result{1};
    h = rem(std::move(h), f, q);
    while (e > 0) {
        if (e & 1) result = rem(mul(result, h, q), f, q);
        h = rem(mul(h, h, q), f, q);
        e >>= 1;
    }
    return result;
}

}  // namespace fq

DegreeList degree_list(const IntPolynomial& p, std::uint64_t q) {
    p.validate();
    if (!is_prime_u64(q)) throw std::invalid_argument("degree_list: modulus is not prime");

    DegreeList out;
    out.prime = q;

    fq::Poly f(p.coeffs.size());
    for (std::size_t i = 0; i < p.coeffs.size(); ++i)
        f[i] = mpz_fdiv_ui(p.coeffs[i].get_mpz_t(), q);
    if (f.back() == 0) {
        out.skipped = DegreeList::Skip::degree_drop;
        return out;
    }
    f = fq::make_monic(std::move(f), q);

    const fq::Poly fp = fq::derivative(f, q);
    if (fp.empty() || fq::deg(fq::gcd(f, fp, q)) >= 1) {
        out.skipped = DegreeList::Skip::not_squarefree;
        return out;
    }

    // distinct-degree factorization
    fq::Poly x{0, 1};
    fq::Poly frob = x;  // x^{q^d} mod f after d Frobenius steps
    for (std::uint32_t d = 1; 2 * d <= static_cast<std::uint32_t>(fq::deg(f)); ++d) {
        frob = fq::powmod(std::move(frob), q, f, q);
        fq::Poly diff = frob;
        // diff := frob - x
        if (diff.size() < 2) diff.resize(2, 0);
        diff[1] = (diff[1] + q - 1) % q;
        fq::trim(diff);
        const fq::Poly g = fq::gcd(f, diff, q);
        if (fq::deg(g) >= 1) {
            for (int copies = fq::deg(g) / static_cast<int>(d); copies > 0; --copies)
                out.degrees.push_back(d);
            f = fq::quot(std::move(f), g, q);
            frob = fq::rem(std::move(frob), f, q);
        }
        if (fq::deg(f) == 0) break;
    }
    if (fq::deg(f) >= 1) out.degrees.push_back(static_cast<std::uint32_t>(fq::deg(f)));
    std::sort(out.degrees.begin(), out.degrees.end());
    return out;
}

}  // namespace cyclecert
