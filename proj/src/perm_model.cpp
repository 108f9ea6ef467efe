#include "cyclecert/perm_model.hpp"

#include <cmath>
#include <stdexcept>

namespace cyclecert {

CycleType sample_cycle_type(std::uint32_t n, TrialRng& rng) {
    if (n == 0) throw std::invalid_argument("sample_cycle_type: n must be positive");
    CycleType ct;
    ct.n = n;
    std::uint32_t remaining = n;
    while (remaining > 0) {
        const std::uint32_t len = 1 + static_cast<std::uint32_t>(rng.below(remaining));
        ++ct.counts[len];
        remaining -= len;
    }
    return ct;
}

PoissonSampler::PoissonSampler(std::uint32_t limit, double x) : limit_(limit), x_(x) {
    if (limit == 0) throw std::invalid_argument("PoissonSampler: limit must be positive");
    if (!(x > 0.0)) throw std::invalid_argument("PoissonSampler: tilt must be positive");
    zero_prob_.resize(limit);
    for (std::uint32_t k = 1; k <= limit; ++k)
        zero_prob_[k - 1] = std::exp(-x / static_cast<double>(k));
}

void PoissonSampler::sample_into(MultiplicityVector& out, TrialRng& rng) const {
    out.limit = limit_;
    out.x.resize(limit_);
    for (std::uint32_t k = 1; k <= limit_; ++k)
        out.x[k - 1] = poisson_inversion(rng, x_ / static_cast<double>(k), zero_prob_[k - 1]);
}

MultiplicityVector PoissonSampler::sample(TrialRng& rng) const {
    MultiplicityVector mv(limit_);
    sample_into(mv, rng);
    return mv;
}

std::uint64_t PoissonSampler::sample_weighted_sum(TrialRng& rng) const {
    std::uint64_t w = 0;
    for (std::uint32_t k = 1; k <= limit_; ++k)
        w += static_cast<std::uint64_t>(k) *
             poisson_inversion(rng, x_ / static_cast<double>(k), zero_prob_[k - 1]);
    return w;
}

MultiplicityVector sample_poisson(std::uint32_t limit, TrialRng& rng) {
    return PoissonSampler(limit).sample(rng);
}

MultiplicityVector sample_poisson_tilted(std::uint32_t limit, double x, TrialRng& rng) {
    return PoissonSampler(limit, x).sample(rng);
}

namespace {

void enumerate_rec(std::uint32_t remaining, std::uint32_t max_part,
                   std::map<std::uint32_t, std::uint32_t>& current,
                   std::uint32_t n, std::vector<PartitionEntry>& out) {
    if (remaining == 0) {
        // probability of this cycle type: 1 / prod_k (k^{m_k} m_k!)
        mpz_class denom = 1;
        for (const auto& [len, mult] : current) {
            mpz_class p;
            mpz_ui_pow_ui(p.get_mpz_t(), len, mult);
            mpz_class f;
            mpz_fac_ui(f.get_mpz_t(), mult);
            denom *= p * f;
        }
        mpq_class prob(1, denom);
        prob.canonicalize();
        out.push_back({CycleType(n, current), prob, prob.get_d()});
        return;
    }
    for (std::uint32_t part = std::min(remaining, max_part); part >= 1; --part) {
        ++current[part];
        enumerate_rec(remaining - part, part, current, n, out);
        if (--current[part] == 0) current.erase(part);
    }
}

}  // namespace

PartitionTable enumerate_partitions(std::uint32_t n) {
    if (n == 0) throw std::invalid_argument("enumerate_partitions: n must be positive");
    if (n > kPartitionCap)
        throw std::invalid_argument("enumerate_partitions: oracle limit exceeded (n > 30)");
    PartitionTable table;
    table.n = n;
    std::map<std::uint32_t, std::uint32_t> current;
    enumerate_rec(n, n, current, n, table.entries);
    return table;
}

std::uint32_t m_of(std::uint32_t n) {
    if (n < 3) throw std::invalid_argument("m_of: requires n >= 3");
    return static_cast<std::uint32_t>(std::floor(n / std::log(static_cast<double>(n))));
}

ProfileStats profile(const MultiplicityVector& mv, double eps) {
    ProfileStats ps;
    profile_into(mv, eps, ps);
    return ps;
}

void profile_into(const MultiplicityVector& mv, double eps, ProfileStats& ps) {
    if (!(eps > 0.0)) throw std::invalid_argument("profile: eps must be positive");
    const std::uint32_t limit = mv.limit;
    ps.tau_eps = 0;
    ps.tau = 0;
    ps.z.assign(limit + 1, 0);
    ps.w.assign(limit + 1, 0);
    for (std::uint32_t k = 1; k <= limit; ++k) {
        ps.z[k] = ps.z[k - 1] + mv.x[k - 1];
        ps.w[k] = ps.w[k - 1] + static_cast<std::uint64_t>(k) * mv.x[k - 1];
    }
    // k = 1 is excluded from tau_eps: the threshold (1+eps) ln 1 = 0 holds
    // vacuously for every sample, so only k >= 2 carries information.
    // Scan from the top; when k fails, no k' in (exp(Z_k/(1+eps)), k) can
    // trigger either (Z nondecreasing, threshold increasing), so jump.
    for (std::uint32_t k = limit; k >= 2;) {
        const double zk = static_cast<double>(ps.z[k]);
        if (zk >= (1.0 + eps) * std::log(static_cast<double>(k))) {
            ps.tau_eps = k;
            break;
        }
        std::uint32_t next = k - 1;
        const double reach = std::exp(zk / (1.0 + eps));
        if (reach < static_cast<double>(next)) next = static_cast<std::uint32_t>(std::floor(reach));
        k = next;
    }
    // same jump argument: a failure at k rules out every k' in (W_{m(k)}, k)
    for (std::uint32_t k = limit; k >= 3;) {
        const std::uint64_t wm = ps.w[m_of(k)];
        if (wm >= k) {
            ps.tau = k;
            break;
        }
        k = static_cast<std::uint32_t>(std::min<std::uint64_t>(k - 1, wm));
    }
    ps.t = std::max(ps.tau_eps, ps.tau);
    ps.censored = (limit > 0 && ps.t == limit);
}

}  // namespace cyclecert
