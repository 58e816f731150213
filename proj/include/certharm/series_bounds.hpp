#pragma once

#include "certharm/rational.hpp"

#include <cstdint>

namespace certharm {

enum class TailMethod { Leibniz, IntegralTest };

// Rigorous rational bounds on a series remainder.  `n` is the index the
// tail starts after (the bound covers sum_{p > n}); 0 when the producer has
// no index to attach.
struct TailBound {
    std::uint64_t n;
    Rational lower;
    Rational upper;
    TailMethod method;
};

// Alternating-series remainder: with term magnitudes decreasing to zero past
// the truncation point (caller's responsibility, asserted upstream), the sum
// lies within the first omitted term of the partial sum, on the side of that
// term's sign.  first_omitted = 0 yields the degenerate bracket [S, S].
TailBound leibniz_bracket(const Rational& partial_sum, const Rational& first_omitted);

// One power-law term f(p) = c / p^k with c > 0, k >= 2, so the tail
// integrals are closed forms: integral from n of c/x^k dx = c/((k-1) n^(k-1)).
struct PowerLawTerm {
    Rational c;
    unsigned k;
};

// Integral-test sandwich on the remainder R_n = f(n+1) + f(n+2) + ...:
//   integral from n+1 < R_n < integral from n.
// Throws std::domain_error for k <= 1 (divergent tail).
TailBound integral_test_tail(const PowerLawTerm& term, std::uint64_t n);

// The combined sandwich on sum_{p=n}^inf sigma_p obtained by applying the
// integral test to the two leading sliver-series majorants 1/(6p^3) and
// 1/(4p^4):
//   1/(12(n+1)^2) - 1/(12n^3)  <  sum  <  1/(12n^2)
// Valid for n >= 2 (Leibniz hypotheses on the sliver series).
TailBound sigma_tail_sandwich(std::uint64_t n);

// Algebraic simplification of the sandwich's lower endpoint:
//   1/(12(n+1)^2) - 1/(12n^3) > 1/(12n^2) - 1/(4n^3)
// for every n >= 1.  This returns the right-hand side; the inequality itself
// is checked by exact arithmetic in the verification suites.
Rational sigma_sandwich_lower_simplified(std::uint64_t n);

} // namespace certharm
