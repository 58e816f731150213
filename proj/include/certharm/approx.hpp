#pragma once

#include "certharm/gamma.hpp"
#include "certharm/interval.hpp"
#include "certharm/rational.hpp"

#include <cstdint>
#include <optional>
#include <string>

namespace certharm {

// Truncation points of the asymptotic expansion
//   H_n ~ ln n + gamma + 1/(2n) - 1/(12n^2) + 1/(120n^4) - 1/(252n^6) ...
// Each level keeps the ladder up to and including the named term.
enum class EmLevel { LogOnly, HalfN, Quad, Quartic, Sextic };

const char* em_level_name(EmLevel level);
std::optional<EmLevel> em_level_from_name(const std::string& name);

struct EmTruncation {
    std::uint64_t n;
    EmLevel level;
    Interval value;
    // Signed first dropped term.  Empty at Sextic: the expansion is used
    // only through the terms listed above, so there is no next coefficient
    // to name.
    std::optional<Rational> first_omitted;
    // H_n minus value (H_n exact, so the width is the value's width).
    Interval error;
};

// The truncation-error claim for one EmTruncation: the error has the sign of
// the first omitted term and is smaller in magnitude.  Decided by strict
// interval comparison; Undecided means the enclosure is too wide to tell.
enum class ClaimStatus { Holds, Violated, Undecided };
ClaimStatus em_error_claim(const EmTruncation& t);

enum class ApproxMethod { NaiveSum, YoungLinear, Quadratic, EulerMaclaurin };

struct ApproxResult {
    std::uint64_t n;
    ApproxMethod method;
    Interval value;
    // When present: |H_n - v| <= bound for every v in value, testable
    // against the exact H_n.
    std::optional<Rational> certified_abs_error_bound;
};

// ln n + gamma + 1/(2n) - 1/(12n^2), certified within 1/(4n^3) plus the
// enclosure widths.
ApproxResult approx_quadratic(std::uint64_t n, const GammaEnclosure& gamma,
                              PrecisionBudget budget = {});

// ln n + gamma + 1/(2n) (the theta = 0 end of the linear bracket), certified
// within the bracket width 1/(2n) - 1/(2(n+1)) plus the enclosure widths.
ApproxResult approx_young(std::uint64_t n, const GammaEnclosure& gamma,
                          PrecisionBudget budget = {});

EmTruncation approx_euler_maclaurin(std::uint64_t n, EmLevel level,
                                    const GammaEnclosure& gamma,
                                    PrecisionBudget budget = {});
EmTruncation approx_euler_maclaurin(std::uint64_t n, EmLevel level,
                                    const Rational& h_exact,
                                    const GammaEnclosure& gamma,
                                    PrecisionBudget budget = {});

// Plain left-to-right double summation of 1/r; benchmark baseline, no
// certification.
double naive_float_sum(std::uint64_t n);

// The certified bounds by themselves (exact rationals, no enclosure slack).
Rational quadratic_error_bound(std::uint64_t n); // 1/(4n^3)
Rational young_error_bound(std::uint64_t n);     // 1/(2n) - 1/(2(n+1))

} // namespace certharm
