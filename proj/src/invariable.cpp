#include "cyclecert/invariable.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

#include "cyclecert/parallel.hpp"
#include "cyclecert/perm_model.hpp"
#include "cyclecert/prime.hpp"
#include "cyclecert/sumset.hpp"

namespace cyclecert {

namespace {

std::uint32_t common_degree(std::span<const CycleType> cts) {
    if (cts.empty()) throw std::invalid_argument("certificate: empty cycle-type list");
    const std::uint32_t n = cts[0].n;
    for (const auto& ct : cts)
        if (ct.n != n) throw std::invalid_argument("certificate: mismatched degrees");
    return n;
}

}  // namespace

Certificate invariably_transitive(std::span<const CycleType> cts) {
    Certificate cert;
    cert.n = common_degree(cts);
    std::vector<SumsetMask> masks;
    masks.reserve(cts.size());
    for (const auto& ct : cts) masks.push_back(sumset_of_cycle_type(ct));
    auto common = intersect_nontrivial(masks, /*exclude_endpoints=*/true);
    cert.common_elements.assign(common.begin(), common.end());
    cert.transitive = cert.common_elements.empty();
    return cert;
}

Certificate full_certificate(std::span<const CycleType> cts) {
    Certificate cert = invariably_transitive(cts);
    const std::uint32_t n = cert.n;
    cert.jordan_applicable = n > 12;
    for (const auto& ct : cts) {
        if (parity(ct) == Parity::odd) cert.odd_class_present = true;
        for (const auto& [len, mult] : ct.counts) {
            // prime length in (n/2, n-5]
            if (2 * len > n && len + 5 <= n && is_prime_u64(len)) {
                cert.large_prime_cycle_present = true;
                if (!cert.witness_prime) cert.witness_prime = len;
            }
        }
    }
    return cert;
}

std::vector<QEstimate> estimate_q(std::uint32_t n, std::uint32_t r_max, std::uint64_t trials,
                                  std::uint64_t seed, int threads) {
    if (n < 2) throw std::invalid_argument("estimate_q: n must be >= 2");
    if (r_max < 1) throw std::invalid_argument("estimate_q: r_max must be >= 1");
    if (trials == 0) throw std::invalid_argument("estimate_q: trials must be positive");

    // per trial: the smallest r whose running intersection is already
    // trivial, or r_max + 1 when none is (success for all r >= that index)
    auto kernel = [n, r_max, seed](std::uint64_t trial) -> std::uint32_t {
        TrialRng rng(seed, trial);
        SumsetMask running = sumset_of_cycle_type(sample_cycle_type(n, rng));
        std::uint32_t first_success = r_max + 1;
        for (std::uint32_t r = 1; r <= r_max; ++r) {
            if (r > 1) running.intersect_with(sumset_of_cycle_type(sample_cycle_type(n, rng)));
            if (!running.any_in(1, n - 1)) {
                first_success = r;
                break;
            }
        }
        return first_success;
    };

    const auto first_success = run_trials<std::uint32_t>(trials, threads, kernel);

    std::vector<QEstimate> out(r_max);
    std::vector<std::uint64_t> successes(r_max + 2, 0);
    for (std::uint32_t fs : first_success)
        if (fs <= r_max) ++successes[fs];
    std::uint64_t cumulative = 0;
    for (std::uint32_t r = 1; r <= r_max; ++r) {
        cumulative += successes[r];
        QEstimate& qe = out[r - 1];
        qe.n = n;
        qe.r = r;
        qe.trials = trials;
        qe.successes = cumulative;
        qe.estimate = static_cast<double>(cumulative) / static_cast<double>(trials);
        const Interval ci = wilson_ci(cumulative, trials, kZ95);
        qe.ci_low = ci.lo;
        qe.ci_high = ci.hi;
    }
    return out;
}

mpq_class exact_q(std::uint32_t n, std::uint32_t r) {
    if (n == 0) throw std::invalid_argument("exact_q: n must be positive");
    if (n > kExactQCap) throw std::invalid_argument("exact_q: cap exceeded (n > 12)");
    if (r < 1) throw std::invalid_argument("exact_q: r must be >= 1");

    // group partitions by their sumset bit pattern (n + 1 <= 13 bits)
    const PartitionTable table = enumerate_partitions(n);
    std::map<std::uint32_t, mpq_class> mass;
    for (const auto& entry : table.entries) {
        const SumsetMask mask = sumset_of_cycle_type(entry.type);
        std::uint32_t bits = 0;
        for (std::uint32_t j = 0; j <= n; ++j)
            if (mask.test(j)) bits |= (1u << j);
        mass[bits] += entry.probability;
    }

    // propagate the law of the running intersection over r draws
    const std::uint32_t full = (n + 1 >= 32) ? ~0u : ((1u << (n + 1)) - 1);
    std::map<std::uint32_t, mpq_class> state;
    state[full] = 1;
    for (std::uint32_t step = 0; step < r; ++step) {
        std::map<std::uint32_t, mpq_class> next;
        for (const auto& [s, p] : state)
            for (const auto& [m, q] : mass) next[s & m] += p * q;
        state = std::move(next);
    }

    const std::uint32_t trivial = (1u << 0) | (1u << n);
    mpq_class result = 0;
    for (const auto& [s, p] : state)
        if ((s & ~trivial & full) == 0) result += p;
    result.canonicalize();
    return result;
}

mpz_class count_invariant_sets(const CycleType& ct, std::uint32_t k) {
    ct.validate();
    if (k > ct.n) throw std::invalid_argument("count_invariant_sets: k out of [0, n]");
    // coefficient of z^k in prod_j (1 + z^j)^{m_j}
    std::vector<mpz_class> coeff(k + 1, 0);
    coeff[0] = 1;
    for (const auto& [len, mult] : ct.counts) {
        if (len > k) continue;
        std::vector<mpz_class> next(k + 1, 0);
        const std::uint32_t max_take = std::min<std::uint32_t>(mult, k / len);
        std::vector<mpz_class> binom(max_take + 1);
        for (std::uint32_t a = 0; a <= max_take; ++a)
            mpz_bin_uiui(binom[a].get_mpz_t(), mult, a);
        for (std::uint32_t c = 0; c <= k; ++c) {
            if (coeff[c] == 0) continue;
            for (std::uint32_t a = 0; a <= max_take && c + a * len <= k; ++a)
                next[c + a * len] += coeff[c] * binom[a];
        }
        coeff = std::move(next);
    }
    return coeff[k];
}

MeanEstimate mean_invariant_sets(std::uint32_t n, std::uint32_t k, std::uint64_t trials,
                                 std::uint64_t seed, int threads) {
    if (!(k > 0 && k < n)) throw std::invalid_argument("mean_invariant_sets: need 0 < k < n");
    if (trials == 0) throw std::invalid_argument("mean_invariant_sets: trials must be positive");
    auto kernel = [n, k, seed](std::uint64_t trial) -> double {
        TrialRng rng(seed, trial);
        const CycleType ct = sample_cycle_type(n, rng);
        // counts are bounded by 2^{#cycles} <= 2^n, exact in a double for n <= 52
        return count_invariant_sets(ct, k).get_d();
    };
    const auto counts = run_trials<double>(trials, threads, kernel);
    const MeanStderr ms = mean_stderr(counts);
    return {trials, ms.mean, ms.stderr_};
}

mpq_class exact_mean_invariant_sets(std::uint32_t n, std::uint32_t k) {
    const PartitionTable table = enumerate_partitions(n);
    mpq_class total = 0;
    for (const auto& entry : table.entries)
        total += entry.probability * mpq_class(count_invariant_sets(entry.type, k));
    total.canonicalize();
    return total;
}

namespace {

void tv_enumerate(std::uint32_t m, std::uint32_t budget, std::uint32_t j, double nu_log,
                  std::vector<std::uint32_t>& c,
                  const std::map<std::vector<std::uint32_t>, mpq_class>& q_map, double& abs_sum,
                  double& nu_on_support) {
    if (j > m) {
        const double nu = std::exp(nu_log);
        nu_on_support += nu;
        const auto it = q_map.find(c);
        const double q = (it == q_map.end()) ? 0.0 : it->second.get_d();
        abs_sum += std::abs(q - nu);
        return;
    }
    // log of the nu factor e^{-1/j} (1/j)^{c_j} / c_j!, updated per c_j
    double log_factor = -1.0 / static_cast<double>(j);
    for (std::uint32_t cj = 0; static_cast<std::uint64_t>(cj) * j <= budget; ++cj) {
        if (cj > 0)
            log_factor -= std::log(static_cast<double>(j)) + std::log(static_cast<double>(cj));
        c.push_back(cj);
        tv_enumerate(m, budget - cj * j, j + 1, nu_log + log_factor, c, q_map, abs_sum,
                     nu_on_support);
        c.pop_back();
    }
}

}  // namespace

TvReport tv_distance_exact(std::uint32_t n, std::uint32_t m) {
    if (n > 20) throw std::invalid_argument("tv_distance_exact: cap exceeded (n > 20)");
    if (m < 1 || m > n) throw std::invalid_argument("tv_distance_exact: need 1 <= m <= n");

    // marginal joint law of (C_1, ..., C_m) under the uniform measure
    const PartitionTable table = enumerate_partitions(n);
    std::map<std::vector<std::uint32_t>, mpq_class> q_map;
    for (const auto& entry : table.entries) {
        std::vector<std::uint32_t> key(m, 0);
        for (const auto& [len, mult] : entry.type.counts)
            if (len <= m) key[len - 1] = mult;
        q_map[key] += entry.probability;
    }

    // walk the full reachable support {c : sum j c_j <= n}; the product
    // Poisson mass outside it enters exactly via the complement
    double abs_sum = 0.0;
    double nu_on_support = 0.0;
    std::vector<std::uint32_t> c;
    c.reserve(m);
    tv_enumerate(m, n, 1, 0.0, c, q_map, abs_sum, nu_on_support);

    TvReport report;
    report.n = n;
    report.m = m;
    report.off_support_mass = std::max(0.0, 1.0 - nu_on_support);
    report.tv = 0.5 * (abs_sum + report.off_support_mass);
    return report;
}

}  // namespace cyclecert
