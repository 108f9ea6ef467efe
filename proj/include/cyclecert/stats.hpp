#pragma once

#include <cmath>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

namespace cyclecert {

struct Interval {
    double lo = 0.0;
    double hi = 0.0;
};

inline constexpr double kZ95 = 1.959963984540054;
inline constexpr double kZ99 = 2.5758293035489004;

// Wilson score interval for a binomial proportion.
inline Interval wilson_ci(std::uint64_t successes, std::uint64_t trials, double z = kZ95) {
    if (trials == 0) throw std::invalid_argument("wilson_ci: trials must be positive");
    if (successes > trials) throw std::invalid_argument("wilson_ci: successes > trials");
    const double n = static_cast<double>(trials);
    const double p = static_cast<double>(successes) / n;
    const double z2 = z * z;
    const double denom = 1.0 + z2 / n;
    const double center = (p + z2 / (2.0 * n)) / denom;
    const double half = z * std::sqrt(p * (1.0 - p) / n + z2 / (4.0 * n * n)) / denom;
    return {center - half, center + half};
}

struct MeanStderr {
    double mean = 0.0;
    double stderr_ = 0.0;
    std::uint64_t count = 0;
};

inline MeanStderr mean_stderr(std::span<const double> values) {
    MeanStderr out;
    out.count = values.size();
    if (values.empty()) return out;
    double sum = 0.0;
    for (double v : values) sum += v;
    out.mean = sum / static_cast<double>(values.size());
    if (values.size() < 2) return out;
    double ss = 0.0;
    for (double v : values) {
        const double d = v - out.mean;
        ss += d * d;
    }
    const double var = ss / static_cast<double>(values.size() - 1);
    out.stderr_ = std::sqrt(var / static_cast<double>(values.size()));
    return out;
}

struct LineFit {
    double slope = 0.0;
    double intercept = 0.0;
    double slope_stderr = 0.0;
};

// Ordinary least squares y = a + b x.
inline LineFit least_squares(std::span<const double> x, std::span<const double> y) {
    if (x.size() != y.size() || x.size() < 2)
        throw std::invalid_argument("least_squares: need >= 2 matching points");
    const double n = static_cast<double>(x.size());
    double sx = 0, sy = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sx += x[i];
        sy += y[i];
    }
    const double mx = sx / n, my = sy / n;
    double sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sxx += (x[i] - mx) * (x[i] - mx);
        sxy += (x[i] - mx) * (y[i] - my);
    }
    if (sxx == 0.0) throw std::invalid_argument("least_squares: degenerate x values");
    LineFit fit;
    fit.slope = sxy / sxx;
    fit.intercept = my - fit.slope * mx;
    if (x.size() > 2) {
        double rss = 0;
        for (std::size_t i = 0; i < x.size(); ++i) {
            const double r = y[i] - (fit.intercept + fit.slope * x[i]);
            rss += r * r;
        }
        fit.slope_stderr = std::sqrt(rss / (n - 2.0) / sxx);
    }
    return fit;
}

// Harmonic number H_n, summed small-terms-first.
inline double harmonic_number(std::uint64_t n) {
    long double h = 0.0L;
    for (std::uint64_t k = n; k >= 1; --k) h += 1.0L / static_cast<long double>(k);
    return static_cast<double>(h);
}

}  // namespace cyclecert
