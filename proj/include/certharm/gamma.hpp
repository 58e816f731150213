#pragma once

#include "certharm/interval.hpp"
#include "certharm/log_enclosure.hpp"
#include "certharm/rational.hpp"

#include <cstdint>

namespace certharm {

// Certified enclosure of Euler's constant, bootstrapped from the quadratic
// approximation bound at a single index n:
//
//   gamma = H_n - ln n - 1/(2n) + 1/(12n^2) - eps_n,   0 < eps_n < 1/(4 n^3)
//
// so gamma lies in [c - 1/(4n^3), c] where c encloses the left-hand
// combination.  The width is 1/(4n^3) plus the ln-enclosure width, and gamma
// sits within eps_n of the upper endpoint -- enclosures derived at different
// n therefore always intersect.  No external constant tables are involved.
struct GammaEnclosure {
    Rational lo;
    Rational hi;
    std::uint64_t derived_at = 0;

    Interval interval() const { return Interval(lo, hi); }
    Rational width() const { return hi - lo; }
};

// Enclosure of gamma_n = H_n - ln n (width equals the ln-enclosure width).
Interval gamma_n(std::uint64_t n, PrecisionBudget budget = {});
Interval gamma_n(std::uint64_t n, const Rational& h_exact, PrecisionBudget budget = {});

// Endpoint denominators of a GammaEnclosure are rounded outward to 2^-cap
// grid multiples; H_n at large n has a denominator with hundreds of
// thousands of digits and dragging it through every downstream operation
// would dominate sweep cost.  The extra width, 2^(1-cap), is far below any
// quantity certified against.
inline constexpr unsigned kGammaDenominatorBits = 256;

GammaEnclosure gamma_enclosure(std::uint64_t n, PrecisionBudget budget = {},
                               unsigned den_bits = kGammaDenominatorBits);
GammaEnclosure gamma_enclosure(std::uint64_t n, const Rational& h_exact,
                               PrecisionBudget budget = {},
                               unsigned den_bits = kGammaDenominatorBits);

// Default index at which to derive gamma when certifying residuals up to
// max_n: the gamma uncertainty 1/(4m^3) must be small against the bounds
// being certified at n <= max_n.
std::uint64_t default_gamma_source(std::uint64_t max_n);

// theta_n solving H_n = ln n + gamma + 1/(2(n + theta_n)), i.e.
// theta_n = 1/(2(H_n - ln n - gamma)) - n.  Throws precision_error when the
// enclosure of H_n - ln n - gamma touches zero (raise the budget or derive
// gamma at a larger index).
Interval residual_theta(std::uint64_t n, const GammaEnclosure& gamma,
                        PrecisionBudget budget = {});
Interval residual_theta(std::uint64_t n, const Rational& h_exact,
                        const GammaEnclosure& gamma, PrecisionBudget budget = {});

// eps_n = H_n - ln n - gamma - 1/(2n) + 1/(12n^2).
Interval residual_epsilon(std::uint64_t n, const GammaEnclosure& gamma,
                          PrecisionBudget budget = {});
Interval residual_epsilon(std::uint64_t n, const Rational& h_exact,
                          const GammaEnclosure& gamma, PrecisionBudget budget = {});

// Per-n bundle of the exact harmonic number and its residual enclosures.
struct HarmonicRecord {
    std::uint64_t n;
    Rational h_exact;
    Interval gamma_n;
    Interval theta;
    Interval epsilon;
};

HarmonicRecord harmonic_record(std::uint64_t n, const GammaEnclosure& gamma,
                               PrecisionBudget budget = {});

} // namespace certharm
