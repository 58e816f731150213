#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "certharm/approx.hpp"
#include "certharm/harmonic.hpp"

#include <cmath>

using namespace certharm;

namespace {

Rational dec(const char* s) { return Rational::from_string(s); }

const GammaEnclosure& gamma_ref() {
    static GammaEnclosure g = gamma_enclosure(10000);
    return g;
}

Interval abs_error(std::uint64_t n, const Interval& value) {
    Interval e = Interval(harmonic_exact(n)) - value;
    if (e.lo().sign() >= 0) return e;
    if (e.hi().sign() <= 0) return -e;
    return Interval(Rational(0), std::max(-e.lo(), e.hi()));
}

} // namespace

TEST_CASE("quadratic kernel") {
    // value at n=1 encloses gamma + 5/12 = 0.9938823315...
    ApproxResult r1 = approx_quadratic(1, gamma_ref());
    CHECK(r1.value.lo() > dec("0.993882"));
    CHECK(r1.value.hi() < dec("0.993883"));
    Interval err1 = abs_error(1, r1.value);
    CHECK(err1.hi() < Rational(1, 4));
    CHECK(err1.lo() > dec("0.006117"));
    CHECK(err1.hi() < dec("0.006118"));

    ApproxResult r100 = approx_quadratic(100, gamma_ref());
    CHECK(abs_error(100, r100.value).hi() < Rational(1, 4000000));
    CHECK(*r100.certified_abs_error_bound >= Rational(1, 4000000));
}

TEST_CASE("quadratic kernel with a degenerate gamma runs on exact rationals only") {
    GammaEnclosure zero{Rational(0), Rational(0), 0};
    ApproxResult r = approx_quadratic(1, zero);
    CHECK(r.value.lo() == Rational(5, 12));
    CHECK(r.value.hi() == Rational(5, 12));
}

TEST_CASE("linear kernel and its bracket-width bound") {
    ApproxResult r1 = approx_young(1, gamma_ref());
    CHECK(young_error_bound(1) == Rational(1, 4)); // 1/2 - 1/4
    Interval err1 = abs_error(1, r1.value);
    CHECK(err1.hi() < Rational(1, 4));
    // |1 - (gamma + 1/2)| = 0.0772156649...
    CHECK(err1.lo() > dec("0.077215"));
    CHECK(err1.hi() < dec("0.077216"));

    ApproxResult r10 = approx_young(10, gamma_ref());
    CHECK(young_error_bound(10) == Rational(1, 220)); // 1/20 - 1/22
    CHECK(abs_error(10, r10.value).hi() < Rational(1, 220));
}

TEST_CASE("certified bounds hold against exact harmonic numbers") {
    for (std::uint64_t n : {1ull, 2ull, 7ull, 50ull, 313ull, 1000ull}) {
        ApproxResult q = approx_quadratic(n, gamma_ref());
        ApproxResult y = approx_young(n, gamma_ref());
        CHECK(abs_error(n, q.value).hi() <= *q.certified_abs_error_bound);
        CHECK(abs_error(n, y.value).hi() <= *y.certified_abs_error_bound);
    }
}

TEST_CASE("bound comparison: quadratic strictly tighter from n = 2, equal at n = 1") {
    CHECK(quadratic_error_bound(1) == young_error_bound(1)); // both 1/4
    for (std::uint64_t n = 2; n <= 2000; ++n)
        CHECK(quadratic_error_bound(n) < young_error_bound(n));
    // and the young bound keeps decreasing
    for (std::uint64_t n = 1; n <= 100; ++n)
        CHECK(young_error_bound(n + 1) < young_error_bound(n));
}

TEST_CASE("expansion truncation: claims at n = 10") {
    EmTruncation quad = approx_euler_maclaurin(10, EmLevel::Quad, gamma_ref());
    REQUIRE(quad.first_omitted.has_value());
    CHECK(*quad.first_omitted == Rational(1, 1200000)); // +1/(120 n^4)
    CHECK(quad.error.lo() > Rational(0));
    CHECK(quad.error.hi() < Rational(1, 1200000));
    CHECK(em_error_claim(quad) == ClaimStatus::Holds);

    EmTruncation quartic = approx_euler_maclaurin(10, EmLevel::Quartic, gamma_ref());
    REQUIRE(quartic.first_omitted.has_value());
    CHECK(*quartic.first_omitted == -Rational(1, 252000000)); // -1/(252 n^6)
    CHECK(quartic.error.hi() < Rational(0));
    CHECK(quartic.error.lo() > -Rational(1, 252000000));
    CHECK(em_error_claim(quartic) == ClaimStatus::Holds);
}

TEST_CASE("expansion truncation at n = 1 is measured data") {
    // the omitted term is -1/12, so the claim predicts a negative error;
    // the measured error is 1 - (gamma + 1/2) = -0.0772... and the claim
    // happens to hold even here
    EmTruncation half = approx_euler_maclaurin(1, EmLevel::HalfN, gamma_ref());
    CHECK(*half.first_omitted == -Rational(1, 12));
    CHECK(half.error.hi() < Rational(0));
    CHECK(half.error.lo() > dec("-0.077216"));
    CHECK(half.error.hi() < dec("-0.077215"));
    CHECK(em_error_claim(half) == ClaimStatus::Holds);
}

TEST_CASE("truncating after gamma alone") {
    EmTruncation log_only = approx_euler_maclaurin(5, EmLevel::LogOnly, gamma_ref());
    CHECK(*log_only.first_omitted == Rational(1, 10));
    CHECK(em_error_claim(log_only) == ClaimStatus::Holds);
}

TEST_CASE("the deepest printed level has no next coefficient") {
    EmTruncation sextic = approx_euler_maclaurin(10, EmLevel::Sextic, gamma_ref());
    CHECK(!sextic.first_omitted.has_value());
    CHECK(em_error_claim(sextic) == ClaimStatus::Undecided);
}

TEST_CASE("claim evaluation distinguishes violation from undecidable width") {
    EmTruncation fake{5, EmLevel::Quad, Interval(Rational(0)), Rational(1, 2),
                      Interval(Rational(-1), Rational(-1, 2))};
    CHECK(em_error_claim(fake) == ClaimStatus::Violated); // wrong sign, certified
    EmTruncation wide{5, EmLevel::Quad, Interval(Rational(0)), Rational(1, 2),
                      Interval(Rational(-1), Rational(1))};
    CHECK(em_error_claim(wide) == ClaimStatus::Undecided);
}

TEST_CASE("float summation baseline") {
    CHECK(naive_float_sum(1) == 1.0);
    CHECK(std::abs(naive_float_sum(4) - 25.0 / 12.0) < 1e-12);
    double mid = approx_quadratic(1000000, gamma_ref(), PrecisionBudget(12)).value.midpoint().to_double();
    CHECK(std::abs(naive_float_sum(1000000) - mid) < 1e-9);
}
