#include "certharm/bench.hpp"

#include "certharm/approx.hpp"
#include "certharm/gamma.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <ostream>
#include <stdexcept>

namespace certharm {

namespace {

// Median per-call seconds.  Calls cheaper than ~0.2 ms are batched inside a
// single timing so scheduler noise does not swamp the measurement.
template <typename Fn>
double median_seconds(unsigned reps, Fn fn) {
    auto probe0 = std::chrono::steady_clock::now();
    fn();
    auto probe1 = std::chrono::steady_clock::now();
    double once = std::chrono::duration<double>(probe1 - probe0).count();
    unsigned batch = once < 2e-4 ? static_cast<unsigned>(2e-4 / std::max(once, 1e-9)) + 1 : 1;

    std::vector<double> times;
    times.reserve(reps);
    for (unsigned i = 0; i < reps; ++i) {
        auto t0 = std::chrono::steady_clock::now();
        for (unsigned j = 0; j < batch; ++j) fn();
        auto t1 = std::chrono::steady_clock::now();
        times.push_back(std::chrono::duration<double>(t1 - t0).count() / batch);
    }
    std::sort(times.begin(), times.end());
    return times[times.size() / 2];
}

} // namespace

std::vector<BenchRow> run_bench(const BenchOptions& options) {
    if (options.reps == 0) throw std::invalid_argument("bench: reps must be >= 1");
    // 64-bit denominator grid: the extra 2^-63 width is invisible at the
    // agreement tolerance and keeps the timed endpoint arithmetic small
    GammaEnclosure gamma = gamma_enclosure(options.gamma_source, options.budget, 64);

    std::vector<BenchRow> rows;
    for (std::uint64_t n : options.n_values) {
        if (n == 0) throw std::invalid_argument("bench: n must be >= 1");
        double naive = 0.0;
        double mid = 0.0;
        double t_naive = median_seconds(options.reps, [&] { naive = naive_float_sum(n); });
        double t_quad = median_seconds(options.reps, [&] {
            // reporting in doubles; the enclosure itself stays exact
            Interval v = approx_quadratic(n, gamma, options.budget).value;
            mid = 0.5 * (v.lo().to_double() + v.hi().to_double());
        });
        double gap = std::abs(naive - mid) / mid;
        rows.push_back(BenchRow{n, t_naive, t_quad, naive, mid, gap});
    }
    return rows;
}

void write_bench(std::ostream& os, const std::vector<BenchRow>& rows) {
    os << "n\tnaive_s\tquadratic_s\tspeedup\tnaive\tquadratic_mid\trel_gap\n";
    char buf[256];
    for (const BenchRow& r : rows) {
        double speedup = r.quadratic_seconds > 0.0 ? r.naive_seconds / r.quadratic_seconds : 0.0;
        std::snprintf(buf, sizeof(buf), "%llu\t%.3e\t%.3e\t%.1f\t%.12f\t%.12f\t%.3e\n",
                      static_cast<unsigned long long>(r.n), r.naive_seconds, r.quadratic_seconds,
                      speedup, r.naive_value, r.quadratic_midpoint, r.relative_gap);
        os << buf;
    }
}

} // namespace certharm
