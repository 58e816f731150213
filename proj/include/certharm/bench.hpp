#pragma once

#include "certharm/log_enclosure.hpp"

#include <cstdint>
#include <iosfwd>
#include <vector>

namespace certharm {

// Wall-time comparison of the O(n) float summation against the O(1)
// certified quadratic formula.  gamma is derived once outside the timed
// region (it is a shared constant); the default budget is the smallest that
// keeps the enclosure far below the agreement tolerance printed alongside.
struct BenchOptions {
    std::vector<std::uint64_t> n_values = {1000000};
    unsigned reps = 5;
    // 8 series terms keep the enclosure near 5e-10, well under the 1e-8
    // agreement tolerance, without paying for unused digits
    PrecisionBudget budget{8};
    std::uint64_t gamma_source = 10000;
};

struct BenchRow {
    std::uint64_t n;
    double naive_seconds;     // median over reps
    double quadratic_seconds; // median over reps
    double naive_value;
    double quadratic_midpoint;
    double relative_gap; // |naive - midpoint| / midpoint
};

std::vector<BenchRow> run_bench(const BenchOptions& options);

void write_bench(std::ostream& os, const std::vector<BenchRow>& rows);

} // namespace certharm
