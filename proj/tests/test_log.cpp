#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "certharm/log_enclosure.hpp"

#include <random>
#include <stdexcept>

using certharm::Interval;
using certharm::log2_enclosure;
using certharm::log_enclosure;
using certharm::PrecisionBudget;
using certharm::Rational;

namespace {

// Test-side oracle: atanh(t) bracketed by summing far past any budget under
// test, with the same geometric tail estimate computed from scratch.
Interval oracle_atanh(const Rational& t, unsigned terms) {
    Rational t2 = t * t, power = t, sum(0);
    for (unsigned j = 0; j < terms; ++j) {
        sum += power / Rational(static_cast<std::int64_t>(2 * j + 1), 1);
        power *= t2;
    }
    Rational tail = power / (Rational(static_cast<std::int64_t>(2 * terms + 1), 1) * (Rational(1) - t2));
    return Interval(sum, sum + tail);
}

Interval oracle_log(const Rational& m, unsigned terms = 200) {
    // no argument reduction on the oracle side; converges for any m > 0
    Rational t = (m - Rational(1)) / (m + Rational(1));
    REQUIRE(certharm::abs(t) < Rational(1));
    if (t.sign() >= 0) return Rational(2) * oracle_atanh(t, terms);
    Interval pos = Rational(2) * oracle_atanh(-t, terms);
    return -pos;
}

} // namespace

TEST_CASE("ln 1 is exactly zero") {
    Interval iv = log_enclosure(Rational(1));
    CHECK(iv.lo() == Rational(0));
    CHECK(iv.hi() == Rational(0));
}

TEST_CASE("nonpositive arguments are domain errors") {
    CHECK_THROWS_AS(log_enclosure(Rational(0)), std::domain_error);
    CHECK_THROWS_AS(log_enclosure(Rational(-3, 2)), std::domain_error);
}

TEST_CASE("ln 2 matches its independently summed oracle") {
    Interval iv = log_enclosure(std::uint64_t(2));
    Interval oracle = Rational(2) * oracle_atanh(Rational(1, 3), 200);
    CHECK(iv.contains(oracle));
    CHECK(iv.width() < Rational::from_string("0.00000000000000000001")); // 1e-20

    // known digits: ln 2 = 0.6931471805599453...
    CHECK(iv.lo() > Rational::from_string("0.693147180559945"));
    CHECK(iv.hi() < Rational::from_string("0.693147180559946"));
}

TEST_CASE("additivity: ln 4 and 2 ln 2 agree as enclosures") {
    Interval ln4 = log_enclosure(std::uint64_t(4));
    Interval sum = log_enclosure(std::uint64_t(2)) + log_enclosure(std::uint64_t(2));
    CHECK(ln4.intersects(sum));
    Interval oracle = Rational(4) * oracle_atanh(Rational(1, 3), 200); // ln 4 = 4 atanh(1/3)
    CHECK(ln4.contains(oracle));
    CHECK(sum.contains(oracle));
}

TEST_CASE("reduced argument enclosures contain the oracle") {
    std::mt19937_64 rng(23);
    std::uniform_int_distribution<std::int64_t> num(1, 2000);
    for (int i = 0; i < 50; ++i) {
        Rational x(num(rng), num(rng));
        if (x.is_zero()) continue;
        Interval iv = log_enclosure(x);
        // oracle without reduction only converges for x in (0, 2); rescale
        // by the exact power of two the implementation would strip
        Rational m = x;
        int k = 0;
        while (m >= Rational(2)) { m = m / Rational(2); ++k; }
        while (m < Rational(1)) { m = m * Rational(2); --k; }
        Interval oracle = oracle_log(m) + Rational(k) * oracle_log(Rational(2));
        CHECK(iv.intersects(oracle));
    }
}

TEST_CASE("ln additivity over random positive rationals") {
    std::mt19937_64 rng(29);
    std::uniform_int_distribution<std::int64_t> num(1, 5000);
    for (int i = 0; i < 100; ++i) {
        Rational a(num(rng), num(rng)), b(num(rng), num(rng));
        Interval lhs = log_enclosure(a * b);
        Interval rhs = log_enclosure(a) + log_enclosure(b);
        CHECK(lhs.intersects(rhs));
    }
}

TEST_CASE("monotonicity: a < b implies ln(a).lo < ln(b).hi") {
    std::mt19937_64 rng(31);
    std::uniform_int_distribution<std::int64_t> num(1, 5000);
    for (int i = 0; i < 100; ++i) {
        Rational a(num(rng), num(rng)), b(num(rng), num(rng));
        if (a == b) continue;
        if (a > b) std::swap(a, b);
        CHECK(log_enclosure(a).lo() < log_enclosure(b).hi());
    }
}

TEST_CASE("budget growth never widens the enclosure") {
    for (std::int64_t xi : {2, 3, 10, 997}) {
        Rational x(xi, 1);
        Rational prev_width = log_enclosure(x, PrecisionBudget(5)).width();
        for (unsigned terms : {8u, 13u, 21u, 40u, 80u}) {
            Rational w = log_enclosure(x, PrecisionBudget(terms)).width();
            CHECK(w <= prev_width);
            prev_width = w;
        }
    }
}

TEST_CASE("default budget keeps the width far below 1e-30 up to n = 1e6") {
    Rational target = Rational(1, 1000000000) / Rational(1000000000) / Rational(1000000000)
                      / Rational(1000); // 1e-30
    for (std::uint64_t n : {2ull, 3ull, 999983ull, 1000000ull}) {
        CHECK(log_enclosure(n).width() < target);
    }
}

TEST_CASE("ln 2 cache returns consistent enclosures") {
    Interval a = log2_enclosure();
    Interval b = log2_enclosure();
    CHECK(a == b);
    CHECK(a.width() < log2_enclosure(PrecisionBudget(5)).width());
}
