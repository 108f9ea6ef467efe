#pragma once

#include <cstdint>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace cyclecert {

inline int hardware_threads() {
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

// Serial reference: runs fn(trial) for every trial in index order.
template <class T, class Fn>
std::vector<T> run_trials_serial(std::uint64_t trials, Fn&& fn) {
    std::vector<T> out(trials);
    for (std::uint64_t i = 0; i < trials; ++i) out[i] = fn(i);
    return out;
}

// OpenMP kernel over trial indices.  Each trial writes only its own slot and
// derives all randomness from (seed, trial), so the result is identical to
// the serial reference for every thread count; reductions are then done over
// the output array in index order.
template <class T, class Fn>
std::vector<T> run_trials(std::uint64_t trials, int threads, Fn&& fn) {
    if (threads <= 1) return run_trials_serial<T>(trials, fn);
    std::vector<T> out(trials);
#ifdef _OPENMP
#pragma omp parallel for schedule(static) num_threads(threads)
    for (long long i = 0; i < static_cast<long long>(trials); ++i)
        out[static_cast<std::uint64_t>(i)] = fn(static_cast<std::uint64_t>(i));
#else
    for (std::uint64_t i = 0; i < trials; ++i) out[i] = fn(i);
#endif
    return out;
}

}  // namespace cyclecert
