#include "certharm/series_bounds.hpp"

#include <stdexcept>

namespace certharm {

TailBound leibniz_bracket(const Rational& partial_sum, const Rational& first_omitted) {
    if (first_omitted.sign() >= 0)
        return TailBound{0, partial_sum, partial_sum + first_omitted, TailMethod::Leibniz};
    return TailBound{0, partial_sum + first_omitted, partial_sum, TailMethod::Leibniz};
}

TailBound integral_test_tail(const PowerLawTerm& term, std::uint64_t n) {
    if (term.k <= 1) throw std::domain_error("integral_test_tail: tail diverges for k <= 1");
    if (term.c.sign() <= 0) throw std::domain_error("integral_test_tail: c must be positive");
    if (n == 0) throw std::domain_error("integral_test_tail: n must be >= 1");
    Rational km1(static_cast<std::uint64_t>(term.k - 1));
    Rational lower = term.c / (km1 * pow(Rational(n + 1), term.k - 1));
    Rational upper = term.c / (km1 * pow(Rational(n), term.k - 1));
    return TailBound{n, std::move(lower), std::move(upper), TailMethod::IntegralTest};
}

TailBound sigma_tail_sandwich(std::uint64_t n) {
    if (n < 2) throw std::domain_error("sigma_tail_sandwich: valid for n >= 2");
    TailBound cubic = integral_test_tail({Rational(1, 6), 3}, n);   // sum 1/(6 p^3)
    TailBound quartic = integral_test_tail({Rational(1, 4), 4}, n); // sum 1/(4 p^4)
    // lower: drop to the tail-from-n+1 bound of the positive part and
    // subtract the full upper bound of the negative part
    return TailBound{n, cubic.lower - quartic.upper, cubic.upper, TailMethod::IntegralTest};
}

Rational sigma_sandwich_lower_simplified(std::uint64_t n) {
    Rational nr(n);
    return Rational(1) / (Rational(12) * pow(nr, 2)) - Rational(1) / (Rational(4) * pow(nr, 3));
}

} // namespace certharm
