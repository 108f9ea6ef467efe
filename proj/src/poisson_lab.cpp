#include "cyclecert/poisson_lab.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "cyclecert/parallel.hpp"
#include "cyclecert/rng.hpp"
#include "cyclecert/sumset.hpp"

namespace cyclecert {

double psi_Z(std::uint32_t n, double lambda) {
    if (n < 1) throw std::invalid_argument("psi_Z: n must be positive");
    return harmonic_number(n) * std::expm1(lambda);
}

double psi_W(std::uint32_t n, double lambda) {
    if (n < 1) throw std::invalid_argument("psi_W: n must be positive");
    if (static_cast<double>(n) * lambda > 700.0)
        throw std::range_error("psi_W: exponent overflow (n * lambda > 700)");
    double sum = 0.0;
    for (std::uint32_t j = n; j >= 1; --j)
        sum += std::expm1(static_cast<double>(j) * lambda) / static_cast<double>(j);
    return sum;
}

double beta(double eps) {
    if (!(eps > -1.0)) throw std::invalid_argument("beta: requires eps > -1");
    return (1.0 + eps) * std::log1p(eps) - eps;
}

double rate_function(double x) {
    if (!(x > 0.0)) throw std::invalid_argument("rate_function: requires x > 0");
    return x - 1.0 - x * std::log(x);
}

double markov_bound_Z(std::uint32_t n, double a) {
    const double hn = harmonic_number(n);
    if (!(a > hn)) throw std::invalid_argument("markov_bound_Z: requires a > H_n");
    const auto objective = [&](double lam) { return psi_Z(n, lam) - a * lam; };
    double best = objective(std::log(a / hn));  // stationary point of the convex objective
    const double logn = std::log(static_cast<double>(n));
    if (a > logn) best = std::min(best, objective(std::log(a / logn)));
    for (int i = 0; i < 256; ++i) {
        const double lam = std::exp(-8.0 + 12.0 * i / 255.0);
        best = std::min(best, objective(lam));
    }
    return best;
}

double markov_bound_W(std::uint32_t n, double a) {
    if (!(a > static_cast<double>(n))) throw std::invalid_argument("markov_bound_W: requires a > n");
    const auto objective = [&](double lam) { return psi_W(n, lam) - a * lam; };
    const double lam_hi = 699.0 / static_cast<double>(n);
    double best = objective(0.5 * lam_hi);
    if (a >= 16.0) {
        const double loga = std::log(a);
        const double lam_closed = loga * std::log(loga) / a;
        if (lam_closed > 0.0 && lam_closed < lam_hi) best = std::min(best, objective(lam_closed));
    }
    for (int i = 0; i < 512; ++i) {
        const double lam = lam_hi * std::exp(-16.0 + 16.0 * i / 511.0);
        best = std::min(best, objective(lam));
    }
    return best;
}

double eta_constant() {
    const double ln2 = std::log(2.0);
    return (1.0 - ln2 - std::log(1.0 / ln2)) / ln2;
}

double tilt_log_weight(const MultiplicityVector& mv, double x) {
    if (!(x > 0.0)) throw std::invalid_argument("tilt_log_weight: requires x > 0");
    std::uint64_t z = 0;
    for (std::uint32_t count : mv.x) z += count;
    return (x - 1.0) * harmonic_number(mv.limit) - static_cast<double>(z) * std::log(x);
}

namespace {

BoundReport make_bound_report(std::uint32_t n, std::uint64_t trials, std::uint64_t successes,
                              double log_bound) {
    BoundReport report;
    report.n = n;
    report.trials = trials;
    report.successes = successes;
    report.estimate = static_cast<double>(successes) / static_cast<double>(trials);
    report.ci = wilson_ci(successes, trials, kZ95);
    report.log_bound = log_bound;
    report.log_estimate = std::log(report.estimate);  // -inf when successes == 0
    report.log_ci = {std::log(report.ci.lo), std::log(report.ci.hi)};
    report.satisfied = report.log_ci.hi <= log_bound;
    return report;
}

}  // namespace

BoundReport verify_tail_Z(std::uint32_t n, double eps, std::uint64_t trials, std::uint64_t seed,
                          int threads) {
    if (n < 1) throw std::invalid_argument("verify_tail_Z: n must be positive");
    if (!(eps > 0.0)) throw std::invalid_argument("verify_tail_Z: eps must be positive");
    if (trials == 0) throw std::invalid_argument("verify_tail_Z: trials must be positive");
    const double hn = harmonic_number(n);
    const double threshold = (1.0 + eps) * std::log(static_cast<double>(n));
    const auto outcomes = run_trials<std::uint8_t>(trials, threads, [=](std::uint64_t trial) {
        TrialRng rng(seed, trial);
        return static_cast<std::uint8_t>(static_cast<double>(poisson_draw(rng, hn)) >= threshold);
    });
    std::uint64_t successes = 0;
    for (std::uint8_t o : outcomes) successes += o;
    const double log_bound = 1.0 - beta(eps) * std::log(static_cast<double>(n));
    return make_bound_report(n, trials, successes, log_bound);
}

BoundReport verify_tail_W(std::uint32_t n, std::uint64_t trials, std::uint64_t seed, int threads) {
    if (trials == 0) throw std::invalid_argument("verify_tail_W: trials must be positive");
    const std::uint32_t m = m_of(n);  // rejects n < 3
    const PoissonSampler sampler(m);
    const auto outcomes = run_trials<std::uint8_t>(trials, threads, [&, seed, n](std::uint64_t trial) {
        TrialRng rng(seed, trial);
        return static_cast<std::uint8_t>(sampler.sample_weighted_sum(rng) >= n);
    });
    std::uint64_t successes = 0;
    for (std::uint8_t o : outcomes) successes += o;
    const double logn = std::log(static_cast<double>(n));
    const double log_bound = -logn * (std::log(logn) - 1.0);
    return make_bound_report(n, trials, successes, log_bound);
}

SharpReport verify_sharp(std::uint32_t n, double x, std::uint64_t trials, std::uint64_t seed,
                         int threads) {
    if (!(x > 0.0)) throw std::invalid_argument("verify_sharp: requires x > 0");
    if (trials == 0) throw std::invalid_argument("verify_sharp: trials must be positive");
    const double hn = harmonic_number(n);
    const double logn = std::log(static_cast<double>(n));
    const double threshold = x * logn;
    const double logx = std::log(x);

    struct TrialOut {
        double weighted_indicator;
        double log_weight;
    };
    const auto outs = run_trials<TrialOut>(trials, threads, [=](std::uint64_t trial) {
        TrialRng rng(seed, trial);
        const std::uint32_t z = poisson_draw(rng, x * hn);  // law of Z_n under the tilt
        const double logw = (x - 1.0) * hn - static_cast<double>(z) * logx;
        const double wi = (static_cast<double>(z) >= threshold) ? std::exp(logw) : 0.0;
        return TrialOut{wi, logw};
    });

    std::vector<double> weighted(trials), logw(trials);
    for (std::uint64_t i = 0; i < trials; ++i) {
        weighted[i] = outs[i].weighted_indicator;
        logw[i] = outs[i].log_weight;
    }
    const MeanStderr p = mean_stderr(weighted);
    const MeanStderr lw = mean_stderr(logw);

    SharpReport report;
    report.n = n;
    report.x = x;
    report.trials = trials;
    report.threshold = threshold;
    report.p_estimate = p.mean;
    report.p_stderr = p.stderr_;
    report.exponent_is = std::log(p.mean) / logn;
    report.exponent_typical = lw.mean / logn;
    report.exponent_typical_stderr = lw.stderr_ / logn;
    report.rate = rate_function(x);
    return report;
}

MembershipEstimate estimate_membership(std::uint32_t n, std::uint64_t trials, std::uint64_t seed,
                                       double eps, int threads) {
    if (trials == 0) throw std::invalid_argument("estimate_membership: trials must be positive");
    const std::uint32_t mn = m_of(n);  // rejects n < 3
    const PoissonSampler sampler(n);
    const auto outcomes =
        run_trials<std::uint8_t>(trials, threads, [&, seed, eps, n, mn](std::uint64_t trial) {
            TrialRng rng(seed, trial);
            static thread_local MultiplicityVector mv;
            static thread_local ProfileStats ps;
            sampler.sample_into(mv, rng);
            const bool in_s = sumset_of_multiplicities(mv, n).test(n);
            profile_into(mv, eps, ps);
            std::uint8_t bits = 0;
            if (in_s) bits |= 1;
            if (in_s && ps.t < mn) bits |= 2;
            if (ps.censored) bits |= 4;
            return bits;
        });

    MembershipEstimate est;
    est.n = n;
    est.trials = trials;
    for (std::uint8_t bits : outcomes) {
        est.annealed_successes += (bits & 1) ? 1 : 0;
        est.quenched_successes += (bits & 2) ? 1 : 0;
        est.censored_trials += (bits & 4) ? 1 : 0;
    }
    est.annealed = static_cast<double>(est.annealed_successes) / static_cast<double>(trials);
    est.quenched = static_cast<double>(est.quenched_successes) / static_cast<double>(trials);
    est.annealed_ci = wilson_ci(est.annealed_successes, trials, kZ95);
    est.quenched_ci = wilson_ci(est.quenched_successes, trials, kZ95);
    return est;
}

SizeEstimate estimate_A(std::uint32_t n, std::uint64_t trials, std::uint64_t seed, int threads) {
    if (n < 1) throw std::invalid_argument("estimate_A: n must be positive");
    if (trials == 0) throw std::invalid_argument("estimate_A: trials must be positive");
    const PoissonSampler sampler(n);
    const auto sizes = run_trials<double>(trials, threads, [&, seed, n](std::uint64_t trial) {
        TrialRng rng(seed, trial);
        static thread_local MultiplicityVector mv;
        sampler.sample_into(mv, rng);
        return static_cast<double>(sumset_of_multiplicities(mv, n).count_in(1, n));
    });
    const MeanStderr ms = mean_stderr(sizes);
    return {n, trials, ms.mean, ms.stderr_};
}

EtaFit fit_eta(std::span<const std::uint32_t> n_list, std::uint64_t trials, std::uint64_t seed,
               double eps, int threads) {
    if (n_list.size() < 2) throw std::invalid_argument("fit_eta: need at least two n values");
    EtaFit fit;
    fit.eta_reference = eta_constant();
    std::vector<double> log_n, log_annealed, log_n_q, log_quenched;
    for (std::uint32_t n : n_list) {
        MembershipEstimate est = estimate_membership(n, trials, mix_seed(seed, n), eps, threads);
        const double ln_n = std::log(static_cast<double>(n));
        if (est.annealed_successes > 0) {
            log_n.push_back(ln_n);
            log_annealed.push_back(std::log(est.annealed));
        }
        if (est.quenched_successes > 0) {
            log_n_q.push_back(ln_n);
            log_quenched.push_back(std::log(est.quenched));
        }
        fit.points.push_back(std::move(est));
    }
    fit.annealed = least_squares(log_n, log_annealed);
    fit.quenched = least_squares(log_n_q, log_quenched);
    return fit;
}

std::vector<mpq_class> gf_coefficients(std::uint32_t n) {
    if (n < 1) throw std::invalid_argument("gf_coefficients: n must be positive");
    if (n > 500) throw std::invalid_argument("gf_coefficients: cap exceeded (n > 500)");
    // series of exp(z): 1/i!
    std::vector<mpq_class> coeff(n + 1);
    mpz_class fact = 1;
    coeff[0] = 1;
    for (std::uint32_t i = 1; i <= n; ++i) {
        fact *= i;
        coeff[i] = mpq_class(1, fact);
    }
    // multiply by exp(z^k / k) = sum_i z^{k i} / (k^i i!) for k = 2..n
    for (std::uint32_t k = 2; k <= n; ++k) {
        std::vector<mpq_class> next = coeff;  // i = 0 term
        mpz_class denom = 1;                  // k^i i! = prod_{t<=i} (k t)
        for (std::uint32_t i = 1; i * k <= n; ++i) {
            denom *= k * i;
            const mpq_class term(1, denom);
            const std::uint32_t shift = i * k;
            for (std::uint32_t d = shift; d <= n; ++d) next[d] += coeff[d - shift] * term;
        }
        coeff = std::move(next);
    }
    for (auto& c : coeff) c.canonicalize();
    return coeff;
}

FourfoldReport fourfold_intersection_sim(std::uint32_t n, std::uint64_t trials, std::uint64_t seed,
                                         std::uint32_t cutoff, int threads) {
    if (n < 2) throw std::invalid_argument("fourfold_intersection_sim: n must be >= 2");
    if (cutoff < 1 || cutoff > n)
        throw std::invalid_argument("fourfold_intersection_sim: cutoff out of [1, n]");
    if (trials == 0) throw std::invalid_argument("fourfold_intersection_sim: trials must be positive");
    const PoissonSampler sampler(n);

    struct TrialOut {
        std::uint32_t max_element;
        std::uint8_t empty_beyond;
        std::uint8_t one_in_all;
    };
    const auto outs =
        run_trials<TrialOut>(trials, threads, [&, seed, n, cutoff](std::uint64_t trial) {
            TrialRng rng(seed, trial);
            static thread_local MultiplicityVector mv;
            sampler.sample_into(mv, rng);
            SumsetMask acc = sumset_of_multiplicities(mv, n);
            for (int r = 1; r < 4; ++r) {
                sampler.sample_into(mv, rng);
                acc.intersect_with(sumset_of_multiplicities(mv, n));
            }
            TrialOut out{};
            const std::size_t top = acc.max_in(1, n);
            out.max_element = (top > n) ? 0 : static_cast<std::uint32_t>(top);
            out.empty_beyond = acc.any_in(cutoff, n) ? 0 : 1;
            out.one_in_all = acc.test(1) ? 1 : 0;
            return out;
        });

    FourfoldReport report;
    report.n = n;
    report.trials = trials;
    report.cutoff = cutoff;
    std::vector<std::uint32_t> maxima(trials);
    for (std::uint64_t i = 0; i < trials; ++i) {
        maxima[i] = outs[i].max_element;
        report.empty_beyond_cutoff += outs[i].empty_beyond;
        report.one_in_all += outs[i].one_in_all;
    }
    std::sort(maxima.begin(), maxima.end());
    const auto quantile = [&](double q) {
        const std::size_t idx = std::min<std::size_t>(
            maxima.size() - 1, static_cast<std::size_t>(q * static_cast<double>(maxima.size())));
        return maxima[idx];
    };
    report.max_element_p50 = quantile(0.50);
    report.max_element_p90 = quantile(0.90);
    report.max_element_p99 = quantile(0.99);
    report.max_element_max = maxima.back();
    return report;
}

}  // namespace cyclecert
