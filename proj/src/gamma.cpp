#include "certharm/gamma.hpp"

#include "certharm/errors.hpp"
#include "certharm/harmonic.hpp"

#include <algorithm>
#include <stdexcept>

namespace certharm {

Interval gamma_n(std::uint64_t n, PrecisionBudget budget) {
    return gamma_n(n, harmonic_exact(n), budget);
}

Interval gamma_n(std::uint64_t n, const Rational& h_exact, PrecisionBudget budget) {
    return Interval(h_exact) - log_enclosure(n, budget);
}

GammaEnclosure gamma_enclosure(std::uint64_t n, PrecisionBudget budget, unsigned den_bits) {
    return gamma_enclosure(n, harmonic_exact(n), budget, den_bits);
}

GammaEnclosure gamma_enclosure(std::uint64_t n, const Rational& h_exact,
                               PrecisionBudget budget, unsigned den_bits) {
    Rational nr(n);
    Interval c = Interval(h_exact) - log_enclosure(n, budget)
               - Rational(mpz_class(1), mpz_class(2) * nr.numerator())
               + Rational(mpz_class(1), mpz_class(12) * nr.numerator() * nr.numerator());
    Rational bound = Rational(1) / (Rational(4) * pow(nr, 3));
    Interval g = round_out(Interval(c.lo() - bound, c.hi()), den_bits);
    return GammaEnclosure{g.lo(), g.hi(), n};
}

std::uint64_t default_gamma_source(std::uint64_t max_n) {
    return std::max<std::uint64_t>(10000, 10 * max_n);
}

namespace {

Interval gamma_gap(std::uint64_t n, const Rational& h_exact, const GammaEnclosure& gamma,
                   PrecisionBudget budget) {
    return Interval(h_exact) - log_enclosure(n, budget) - gamma.interval();
}

} // namespace

Interval residual_theta(std::uint64_t n, const GammaEnclosure& gamma, PrecisionBudget budget) {
    return residual_theta(n, harmonic_exact(n), gamma, budget);
}

Interval residual_theta(std::uint64_t n, const Rational& h_exact,
                        const GammaEnclosure& gamma, PrecisionBudget budget) {
    Interval gap = gamma_gap(n, h_exact, gamma, budget);
    if (!gap.strictly_positive())
        throw precision_error("residual_theta: enclosure of H_n - ln n - gamma touches zero", n);
    return reciprocal(Rational(2) * gap) - Rational(n);
}

Interval residual_epsilon(std::uint64_t n, const GammaEnclosure& gamma, PrecisionBudget budget) {
    return residual_epsilon(n, harmonic_exact(n), gamma, budget);
}

Interval residual_epsilon(std::uint64_t n, const Rational& h_exact,
                          const GammaEnclosure& gamma, PrecisionBudget budget) {
    Rational nr(n);
    return gamma_gap(n, h_exact, gamma, budget)
         - Rational(mpz_class(1), mpz_class(2) * nr.numerator())
         + Rational(mpz_class(1), mpz_class(12) * nr.numerator() * nr.numerator());
}

HarmonicRecord harmonic_record(std::uint64_t n, const GammaEnclosure& gamma,
                               PrecisionBudget budget) {
    Rational h = harmonic_exact(n);
    return HarmonicRecord{
        n,
        h,
        gamma_n(n, h, budget),
        residual_theta(n, h, gamma, budget),
        residual_epsilon(n, h, gamma, budget),
    };
}

} // namespace certharm
