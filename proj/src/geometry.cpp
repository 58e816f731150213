#include "certharm/geometry.hpp"

#include "certharm/harmonic.hpp"

#include <stdexcept>

namespace certharm {

namespace {

// ln(1 + 1/n) enclosed through a single reduced-argument series; tighter
// than differencing two separate log enclosures.
Interval log_ratio(std::uint64_t n, PrecisionBudget budget) {
    Rational nr(n);
    return log_enclosure((nr + Rational(1)) / nr, budget);
}

} // namespace

TrapezoidDecomposition decompose(std::uint64_t n, PrecisionBudget budget) {
    if (n == 0) throw std::domain_error("decompose: n must be >= 1");
    Rational nr(n);
    Rational inv_n = reciprocal(nr);
    Rational inv_n1 = reciprocal(nr + Rational(1));
    Interval lnr = log_ratio(n, budget);
    Rational half(1, 2);
    return TrapezoidDecomposition{
        n,
        inv_n1,
        half * (inv_n - inv_n1),
        lnr - inv_n1,
        half * (inv_n + inv_n1) - lnr,
    };
}

Interval delta_partial_sum(std::uint64_t n, std::uint64_t N, PrecisionBudget budget) {
    if (n == 0 || n >= N) throw std::domain_error("delta_partial_sum: need 1 <= n < N");
    Interval sum;
    for (std::uint64_t p = n; p < N; ++p)
        sum = sum + (log_ratio(p, budget) - reciprocal(Rational(p + 1)));
    return sum;
}

Interval delta_tail(std::uint64_t n, const GammaEnclosure& gamma, PrecisionBudget budget) {
    return gamma_n(n, budget) - gamma.interval();
}

Interval sigma_tail(std::uint64_t n, const GammaEnclosure& gamma, PrecisionBudget budget) {
    return sigma_tail(n, harmonic_exact(n), gamma, budget);
}

Interval sigma_tail(std::uint64_t n, const Rational& h_exact, const GammaEnclosure& gamma,
                    PrecisionBudget budget) {
    Rational half_n = Rational(std::int64_t(1), 2) / Rational(n);
    return half_n - gamma_n(n, h_exact, budget) + gamma.interval();
}

Rational sigma_series_coefficient(unsigned k) {
    if (k < 3) throw std::domain_error("sigma_series_coefficient: k must be >= 3");
    Rational mag = Rational(1, 2) - Rational(std::int64_t(1), static_cast<std::int64_t>(k));
    return (k % 2 == 1) ? mag : -mag;
}

Interval sigma_series_eval(std::uint64_t n, unsigned K) {
    if (n < 2)
        throw std::domain_error(
            "sigma_series_eval: term magnitudes do not decrease at n = 1; Leibniz bracket invalid");
    if (K < 3) throw std::domain_error("sigma_series_eval: K must be >= 3");
    Rational nr(n);
    Rational sum(0);
    for (unsigned k = 3; k <= K; ++k)
        sum += sigma_series_coefficient(k) / pow(nr, k);
    Rational next = sigma_series_coefficient(K + 1) / pow(nr, K + 1);
    // last included term positive (K odd) -> the sum overshoots; else it
    // undershoots
    if (next.sign() < 0) return Interval(sum + next, sum);
    return Interval(sum, sum + next);
}

} // namespace certharm
