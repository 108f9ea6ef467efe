#include <chrono>
#include <cstdio>
#include <cstring>
#include <functional>
#include <string>
#include <vector>

#include "cyclecert/invariable.hpp"
#include "cyclecert/parallel.hpp"
#include "cyclecert/poisson_lab.hpp"

// Compares every parallel kernel against the serial reference: identical
// results required, wall time reported.

namespace {

using namespace cyclecert;
using Clock = std::chrono::steady_clock;

struct Outcome {
    std::vector<double> values;  // aggregate statistics, must match exactly
    double ms = 0.0;
};

Outcome timed(const std::function<std::vector<double>(int)>& kernel, int threads) {
    const auto start = Clock::now();
    Outcome out;
    out.values = kernel(threads);
    out.ms = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    const bool smoke = (argc > 1 && std::strcmp(argv[1], "--smoke") == 0);
    const std::uint64_t scale = smoke ? 1 : 20;
    const int threads = hardware_threads();

    struct Case {
        std::string name;
        std::function<std::vector<double>(int)> kernel;
    };
    const std::vector<Case> cases{
        {"simulate-q n=1000 r=4",
         [&](int t) {
             std::vector<double> v;
             for (const auto& qe : estimate_q(1000, 4, 2000 * scale, 7, t)) v.push_back(qe.estimate);
             return v;
         }},
        {"membership n=4096",
         [&](int t) {
             const MembershipEstimate e = estimate_membership(4096, 500 * scale, 7, 0.01, t);
             return std::vector<double>{e.annealed, e.quenched,
                                        static_cast<double>(e.censored_trials)};
         }},
        {"tail-W n=10000",
         [&](int t) {
             const BoundReport r = verify_tail_W(10000, 10000 * scale, 7, t);
             return std::vector<double>{r.estimate, static_cast<double>(r.successes)};
         }},
        {"fourfold n=2048",
         [&](int t) {
             const FourfoldReport r = fourfold_intersection_sim(2048, 400 * scale, 7, 64, t);
             return std::vector<double>{static_cast<double>(r.empty_beyond_cutoff),
                                        static_cast<double>(r.one_in_all),
                                        static_cast<double>(r.max_element_p90)};
         }},
    };

    std::printf("%-24s %12s %14s %9s %7s\n", "kernel", "serial ms", "parallel ms", "speedup",
                "match");
    bool all_match = true;
    for (const auto& c : cases) {
        const Outcome serial = timed(c.kernel, 1);
        const Outcome parallel = timed(c.kernel, threads);
        const bool match = serial.values == parallel.values;
        all_match = all_match && match;
        std::printf("%-24s %12.1f %14.1f %8.2fx %7s\n", c.name.c_str(), serial.ms, parallel.ms,
                    serial.ms / parallel.ms, match ? "yes" : "NO");
    }
    if (!all_match) {
        std::printf("parallel kernels diverged from the serial reference\n");
        return 1;
    }
    std::printf("threads=%d; all parallel kernels match the serial reference\n", threads);
    return 0;
}
