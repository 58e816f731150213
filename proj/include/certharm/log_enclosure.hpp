#pragma once

#include "certharm/interval.hpp"
#include "certharm/rational.hpp"

#include <cstdint>

namespace certharm {

// Controls how many terms of the atanh power series are summed when
// enclosing a logarithm.  Increasing the budget never widens a result.
struct PrecisionBudget {
    unsigned terms = 40;

    constexpr PrecisionBudget() = default;
    constexpr explicit PrecisionBudget(unsigned t) : terms(t == 0 ? 1 : t) {}
};

// Enclosure of ln(x) for rational x > 0.
//
// Argument reduction: x = 2^k * m with m in [1, 2), so ln x = k ln 2 + ln m.
// With t = (m-1)/(m+1) in [0, 1/3) we have ln m = 2 atanh(t), and the odd
// power series sum t^(2j+1)/(2j+1) is summed exactly for `terms` terms.  The
// dropped tail is nonnegative and at most
//     t^(2J+1) / ((2J+1) (1 - t^2))
// (a geometric series of ratio t^2), which is added to the upper endpoint.
// ln 2 itself is 2 atanh(1/3), enclosed the same way.  At the default budget
// the width stays below 1e-38 for every x up to 2^1000.
Interval log_enclosure(const Rational& x, PrecisionBudget budget = {});
Interval log_enclosure(std::uint64_t n, PrecisionBudget budget = {});

// Enclosure of ln 2 (cached per budget).
Interval log2_enclosure(PrecisionBudget budget = {});

} // namespace certharm
