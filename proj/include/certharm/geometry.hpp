#pragma once

#include "certharm/gamma.hpp"
#include "certharm/interval.hpp"
#include "certharm/rational.hpp"

#include <cstdint>

namespace certharm {

// Decomposition of the trapezoid under the chord of y = 1/x over [n, n+1]:
// a rectangle of height 1/(n+1), a curvilinear triangle between the curve
// and that rectangle (area delta_n), and the sliver between the chord and
// the curve (area sigma_n).  Everything reduces to ln(1 + 1/n):
//
//   delta_n = ln(1 + 1/n) - 1/(n+1)
//   sigma_n = (1/2)(1/n + 1/(n+1)) - ln(1 + 1/n)
//
// and delta_n + sigma_n = (1/2)(1/n - 1/(n+1)), the straight triangle's
// area, exactly.
struct TrapezoidDecomposition {
    std::uint64_t n;
    Rational rect_area;     // 1/(n+1)
    Rational triangle_area; // (1/2)(1/n - 1/(n+1))
    Interval delta;
    Interval sigma;
};

TrapezoidDecomposition decompose(std::uint64_t n, PrecisionBudget budget = {});

// Enclosure of sum_{p=n}^{N-1} delta_p, accumulated term by term (not via
// the telescoped closed form, so it can be checked against it).
Interval delta_partial_sum(std::uint64_t n, std::uint64_t N, PrecisionBudget budget = {});

// sum_{p=n}^inf delta_p = gamma_n - gamma.
Interval delta_tail(std::uint64_t n, const GammaEnclosure& gamma, PrecisionBudget budget = {});

// sum_{p=n}^inf sigma_p = 1/(2n) - (H_n - ln n - gamma).
Interval sigma_tail(std::uint64_t n, const GammaEnclosure& gamma, PrecisionBudget budget = {});
Interval sigma_tail(std::uint64_t n, const Rational& h_exact, const GammaEnclosure& gamma,
                    PrecisionBudget budget = {});

// Signed coefficient of 1/n^k in the sliver expansion
//   sigma_n = (1/2 - 1/3)/n^3 - (1/2 - 1/4)/n^4 + (1/2 - 1/5)/n^5 - ...
// i.e. (-1)^(k+1) (1/2 - 1/k) for k >= 3.
Rational sigma_series_coefficient(unsigned k);

// Alternating-series (Leibniz) bracket for sigma_n from the partial sum
// through term K: the sum lies between consecutive partial sums, so the
// bracket is the partial sum extended by the first omitted term on the
// appropriate side.  Requires n >= 2: at n = 1 the term magnitudes
// (1/2 - 1/k) increase with k, the hypotheses fail, and a domain error is
// thrown.  K >= 3.
Interval sigma_series_eval(std::uint64_t n, unsigned K);

} // namespace certharm
