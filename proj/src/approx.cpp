#include "certharm/approx.hpp"

#include "certharm/harmonic.hpp"

#include <stdexcept>

namespace certharm {

const char* em_level_name(EmLevel level) {
    switch (level) {
        case EmLevel::LogOnly: return "log";
        case EmLevel::HalfN: return "half";
        case EmLevel::Quad: return "quad";
        case EmLevel::Quartic: return "quartic";
        case EmLevel::Sextic: return "sextic";
    }
    return "?";
}

std::optional<EmLevel> em_level_from_name(const std::string& name) {
    if (name == "log") return EmLevel::LogOnly;
    if (name == "half") return EmLevel::HalfN;
    if (name == "quad") return EmLevel::Quad;
    if (name == "quartic") return EmLevel::Quartic;
    if (name == "sextic") return EmLevel::Sextic;
    return std::nullopt;
}

namespace {

// Signed terms of the expansion after ln n + gamma, in order.
Rational em_term(std::uint64_t n, unsigned index) {
    mpz_class nz(n);
    switch (index) {
        case 0: return Rational(mpz_class(1), 2 * nz);
        case 1: return Rational(mpz_class(-1), 12 * nz * nz);
        case 2: return Rational(mpz_class(1), 120 * nz * nz * nz * nz);
        case 3: return Rational(mpz_class(-1), 252 * nz * nz * nz * nz * nz * nz);
    }
    throw std::logic_error("em_term: no coefficient at this index");
}

unsigned em_terms_kept(EmLevel level) {
    switch (level) {
        case EmLevel::LogOnly: return 0;
        case EmLevel::HalfN: return 1;
        case EmLevel::Quad: return 2;
        case EmLevel::Quartic: return 3;
        case EmLevel::Sextic: return 4;
    }
    return 0;
}

// ln n + gamma + the ladder up to `level`; does not touch H_n
Interval em_value(std::uint64_t n, EmLevel level, const GammaEnclosure& gamma,
                  PrecisionBudget budget) {
    if (n == 0) throw std::domain_error("approximation kernels require n >= 1");
    unsigned kept = em_terms_kept(level);
    Rational ladder(0);
    for (unsigned i = 0; i < kept; ++i) ladder += em_term(n, i);
    // group the small-denominator parts first; rational addition is
    // associative, so the endpoints are identical either way
    return (gamma.interval() + ladder) + log_enclosure(n, budget);
}

} // namespace

EmTruncation approx_euler_maclaurin(std::uint64_t n, EmLevel level,
                                    const GammaEnclosure& gamma, PrecisionBudget budget) {
    return approx_euler_maclaurin(n, level, harmonic_exact(n), gamma, budget);
}

EmTruncation approx_euler_maclaurin(std::uint64_t n, EmLevel level, const Rational& h_exact,
                                    const GammaEnclosure& gamma, PrecisionBudget budget) {
    Interval value = em_value(n, level, gamma, budget);
    unsigned kept = em_terms_kept(level);
    std::optional<Rational> omitted;
    if (kept < 4) omitted = em_term(n, kept);
    Interval error = Interval(h_exact) - value;
    return EmTruncation{n, level, value, std::move(omitted), error};
}

ClaimStatus em_error_claim(const EmTruncation& t) {
    if (!t.first_omitted) return ClaimStatus::Undecided;
    const Rational& a = *t.first_omitted;
    if (a.sign() > 0) {
        // claim: 0 < error < a
        if (t.error.lo().sign() > 0 && t.error.hi() < a) return ClaimStatus::Holds;
        if (t.error.hi().sign() <= 0 || t.error.lo() >= a) return ClaimStatus::Violated;
        return ClaimStatus::Undecided;
    }
    if (a.sign() < 0) {
        // claim: a < error < 0
        if (t.error.hi().sign() < 0 && t.error.lo() > a) return ClaimStatus::Holds;
        if (t.error.lo().sign() >= 0 || t.error.hi() <= a) return ClaimStatus::Violated;
        return ClaimStatus::Undecided;
    }
    return ClaimStatus::Undecided;
}

ApproxResult approx_quadratic(std::uint64_t n, const GammaEnclosure& gamma,
                              PrecisionBudget budget) {
    Interval value = em_value(n, EmLevel::Quad, gamma, budget);
    Rational bound = quadratic_error_bound(n) + value.width();
    return ApproxResult{n, ApproxMethod::Quadratic, value, std::move(bound)};
}

ApproxResult approx_young(std::uint64_t n, const GammaEnclosure& gamma,
                          PrecisionBudget budget) {
    Interval value = em_value(n, EmLevel::HalfN, gamma, budget);
    Rational bound = young_error_bound(n) + value.width();
    return ApproxResult{n, ApproxMethod::YoungLinear, value, std::move(bound)};
}

double naive_float_sum(std::uint64_t n) {
    if (n == 0) throw std::domain_error("naive_float_sum: n must be >= 1");
    double s = 0.0;
    for (std::uint64_t r = 1; r <= n; ++r) s += 1.0 / static_cast<double>(r);
    return s;
}

Rational quadratic_error_bound(std::uint64_t n) {
    mpz_class nz(n);
    return Rational(mpz_class(1), 4 * nz * nz * nz);
}

Rational young_error_bound(std::uint64_t n) {
    // 1/(2n) - 1/(2(n+1)) = 1/(2n(n+1))
    mpz_class nz(n);
    return Rational(mpz_class(1), 2 * nz * (nz + 1));
}

} // namespace certharm
