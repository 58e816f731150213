#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "certharm/geometry.hpp"
#include "certharm/harmonic.hpp"
#include "certharm/log_enclosure.hpp"

#include <stdexcept>

using namespace certharm;

namespace {

Rational dec(const char* s) { return Rational::from_string(s); }

const GammaEnclosure& gamma_ref() {
    static GammaEnclosure g = gamma_enclosure(10000);
    return g;
}

bool inside(const Interval& iv, const Rational& lo, const Rational& hi) {
    return iv.lo() > lo && iv.hi() < hi;
}

} // namespace

TEST_CASE("decomposition at n = 1") {
    TrapezoidDecomposition d = decompose(1);
    CHECK(d.rect_area == Rational(1, 2));
    CHECK(d.triangle_area == Rational(1, 4));
    // delta_1 = ln 2 - 1/2 = 0.1931471805...
    CHECK(inside(d.delta, dec("0.193147"), dec("0.193148")));
    // sigma_1 = 3/4 - ln 2 = 0.0568528194...
    CHECK(inside(d.sigma, dec("0.056852"), dec("0.056853")));
    // the ln terms cancel exactly in the split identity
    CHECK((d.delta + d.sigma).contains(Rational(1, 4)));
}

TEST_CASE("sliver bracket at n = 10") {
    TrapezoidDecomposition d = decompose(10);
    CHECK(inside(d.sigma, Rational(1, 6000) - Rational(1, 40000), Rational(1, 6000)));
}

TEST_CASE("split identity and positivity over a sweep") {
    for (std::uint64_t n = 1; n <= 2000; ++n) {
        TrapezoidDecomposition d = decompose(n);
        CHECK((d.delta + d.sigma).contains(d.triangle_area));
        CHECK(d.delta.lo() > Rational(0));
        CHECK(d.sigma.lo() > Rational(0));
        CHECK(d.rect_area + d.triangle_area ==
              Rational(1, 2) * (reciprocal(Rational(n)) + reciprocal(Rational(n + 1))));
    }
}

TEST_CASE("partial delta sums") {
    // a single term: delta_1 = ln 2 - 1/2
    Interval one = delta_partial_sum(1, 2);
    CHECK(inside(one, dec("0.193147"), dec("0.193148")));

    // ln(6/5) - 1/6 = 0.0156548901...
    Interval five = delta_partial_sum(5, 6);
    CHECK(inside(five, dec("0.015654"), dec("0.015655")));

    // telescoped closed form
    Interval hundred = delta_partial_sum(1, 100);
    Interval closed = log_enclosure(std::uint64_t(100)) - Interval(harmonic_exact(100) - Rational(1));
    CHECK(hundred.intersects(closed));

    CHECK_THROWS_AS(delta_partial_sum(5, 5), std::domain_error);
    CHECK_THROWS_AS(delta_partial_sum(0, 3), std::domain_error);
}

TEST_CASE("delta tail") {
    // 1 - gamma = 0.4227843350...
    Interval t1 = delta_tail(1, gamma_ref());
    CHECK(inside(t1, dec("0.422784"), dec("0.422785")));

    // additivity: head plus tail meets the full tail
    Interval head = delta_partial_sum(1, 50);
    Interval t50 = delta_tail(50, gamma_ref());
    CHECK((head + t50).intersects(t1));

    // gamma_n - gamma < 1/(2n): sanity envelope at n = 1000
    Interval t1000 = delta_tail(1000, gamma_ref());
    CHECK(inside(t1000, Rational(0), Rational(1, 1000)));
}

TEST_CASE("sigma tail") {
    // 1/2 - (1 - gamma) = gamma - 1/2 = 0.0772156649...
    Interval t1 = sigma_tail(1, gamma_ref());
    CHECK(inside(t1, dec("0.077215"), dec("0.077216")));

    Interval t10 = sigma_tail(10, gamma_ref());
    CHECK(inside(t10, Rational(1, 1452) - Rational(1, 12000), Rational(1, 1200)));

    Interval t100 = sigma_tail(100, gamma_ref());
    CHECK(inside(t100, Rational(1, 12 * 101 * 101) - Rational(1, 12000000), Rational(1, 120000)));
}

TEST_CASE("sliver series coefficients") {
    CHECK(sigma_series_coefficient(3) == Rational(1, 6));
    CHECK(sigma_series_coefficient(4) == -Rational(1, 4));
    CHECK(sigma_series_coefficient(5) == Rational(3, 10));
    CHECK(sigma_series_coefficient(6) == -Rational(1, 3));
    CHECK_THROWS_AS(sigma_series_coefficient(2), std::domain_error);

    // magnitudes increase strictly toward 1/2, signs alternate from +
    Rational prev(0);
    for (unsigned k = 3; k <= 40; ++k) {
        Rational c = sigma_series_coefficient(k);
        CHECK(abs(c) > prev);
        CHECK(abs(c) < Rational(1, 2));
        CHECK((k % 2 == 1) == (c.sign() > 0));
        prev = abs(c);
    }
}

TEST_CASE("series bracket evaluation") {
    // K = 3 at n = 10: the bracket is exactly [1/6000 - 1/40000, 1/6000]
    Interval b = sigma_series_eval(10, 3);
    CHECK(b.hi() == Rational(1, 6000));
    CHECK(b.lo() == Rational(1, 6000) - Rational(1, 40000));
    CHECK(b.contains(decompose(10).sigma));

    // K = 4 at n = 2 brackets sigma_2 = 5/12 - ln(3/2) = 0.0112016...
    Interval b2 = sigma_series_eval(2, 4);
    CHECK(b2.intersects(decompose(2).sigma));

    // the bracket width is exactly the first omitted magnitude
    Interval b6 = sigma_series_eval(10, 6);
    CHECK(b6.width() == (Rational(1, 2) - Rational(1, 7)) / pow(Rational(10), 7));

    CHECK_THROWS_AS(sigma_series_eval(1, 9), std::domain_error);
    CHECK_THROWS_AS(sigma_series_eval(10, 2), std::domain_error);
}

TEST_CASE("series bracket meets the closed form across n and K") {
    for (std::uint64_t n : {2ull, 3ull, 10ull, 47ull, 200ull, 500ull})
        for (unsigned K : {3u, 5u, 9u})
            CHECK(sigma_series_eval(n, K).intersects(decompose(n).sigma));
}
