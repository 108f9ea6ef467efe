#include "cyclecert/galois_screen.hpp"

#include <stdexcept>

#include "cyclecert/prime.hpp"
#include "cyclecert/rng.hpp"

namespace cyclecert {

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::POSITIVE: return "POSITIVE";
        case Verdict::NEGATIVE: return "NEGATIVE";
        case Verdict::UNSUPPORTED_DEGREE: return "UNSUPPORTED_DEGREE";
    }
    return "UNKNOWN";
}

PrimeRange default_prime_range(std::uint32_t degree) {
    const std::uint64_t n2 = static_cast<std::uint64_t>(degree) * degree;
    return {n2, 100 * n2};
}

ScreenVerdict screen(const IntPolynomial& p, std::uint32_t r, PrimeRange range,
                     std::uint64_t seed) {
    p.validate();
    if (p.degree() < 2) throw std::invalid_argument("screen: polynomial degree must be >= 2");
    if (r < 1) throw std::invalid_argument("screen: r must be >= 1");
    if (range.lo < 2 || range.hi <= range.lo)
        throw std::invalid_argument("screen: invalid prime range");

    const std::uint32_t n = p.degree();
    ScreenVerdict out;
    out.seed = seed;

    TrialRng rng(seed, 0);
    const std::uint32_t resample_cap = 64 * r + 256;
    std::uint32_t attempts = 0;
    while (out.degree_lists.size() < r) {
        if (attempts++ >= resample_cap)
            throw std::runtime_error(
                "screen: resample cap exhausted (" + std::to_string(out.primes_skipped) +
                " skipped reductions; is the polynomial squarefree over the integers?)");
        const std::uint64_t q = sample_prime_in(range.lo, range.hi, rng);
        DegreeList dl = degree_list(p, q);
        if (!dl.usable()) {
            ++out.primes_skipped;
            continue;
        }
        ++out.primes_used;
        out.degree_lists.push_back(std::move(dl));
    }

    std::vector<CycleType> cts;
    cts.reserve(r);
    for (const auto& dl : out.degree_lists) {
        std::map<std::uint32_t, std::uint32_t> counts;
        for (std::uint32_t d : dl.degrees) ++counts[d];
        cts.emplace_back(n, std::move(counts));
    }
    out.certificate = full_certificate(cts);

    const Certificate& cert = out.certificate;
    if (cert.transitive && cert.odd_class_present && cert.large_prime_cycle_present &&
        cert.jordan_applicable) {
        out.verdict = Verdict::POSITIVE;
    } else if (cert.transitive && cert.odd_class_present && cert.large_prime_cycle_present) {
        out.verdict = Verdict::UNSUPPORTED_DEGREE;  // evidence complete but n <= 12
    } else {
        out.verdict = Verdict::NEGATIVE;
    }
    return out;
}

}  // namespace cyclecert
