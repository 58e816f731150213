#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "certharm/gamma.hpp"
#include "certharm/geometry.hpp"
#include "certharm/series_bounds.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

using namespace certharm;

TEST_CASE("alternating-series bracket") {
    TailBound b = leibniz_bracket(Rational(1, 6), -Rational(1, 4));
    CHECK(b.lower == -Rational(1, 12));
    CHECK(b.upper == Rational(1, 6));
    CHECK(b.method == TailMethod::Leibniz);

    TailBound zero = leibniz_bracket(Rational(0), Rational(0));
    CHECK(zero.lower == Rational(0));
    CHECK(zero.upper == Rational(0));

    TailBound pos = leibniz_bracket(Rational(7, 12), Rational(1, 30));
    CHECK(pos.lower == Rational(7, 12));
    CHECK(pos.upper == Rational(7, 12) + Rational(1, 30));
}

TEST_CASE("bracket width never exceeds the omitted magnitude") {
    std::mt19937_64 rng(43);
    std::uniform_int_distribution<std::int64_t> num(-500, 500);
    std::uniform_int_distribution<std::int64_t> den(1, 500);
    for (int i = 0; i < 200; ++i) {
        Rational s(num(rng), den(rng)), next(num(rng), den(rng));
        TailBound b = leibniz_bracket(s, next);
        CHECK(b.lower <= b.upper);
        CHECK(b.upper - b.lower <= abs(next));
        CHECK(b.lower <= s);
        CHECK(s <= b.upper);
    }
}

TEST_CASE("power-law tail sandwich in closed form") {
    for (std::uint64_t n : {1ull, 5ull, 10ull, 100ull}) {
        TailBound cubic = integral_test_tail({Rational(1, 6), 3}, n);
        CHECK(cubic.upper == Rational(1) / (Rational(12) * pow(Rational(n), 2)));
        CHECK(cubic.lower == Rational(1) / (Rational(12) * pow(Rational(n + 1), 2)));

        TailBound quartic = integral_test_tail({Rational(1, 4), 4}, n);
        CHECK(quartic.upper == Rational(1) / (Rational(12) * pow(Rational(n), 3)));
        CHECK(quartic.lower <= quartic.upper);
    }
    CHECK_THROWS_AS(integral_test_tail({Rational(1), 1}, 5), std::domain_error);
    CHECK_THROWS_AS(integral_test_tail({Rational(-1), 3}, 5), std::domain_error);
    CHECK_THROWS_AS(integral_test_tail({Rational(1), 3}, 0), std::domain_error);
}

TEST_CASE("the sandwich brackets brute-force partial tails") {
    // float summation to 10^6 leaves a remainder far below the sandwich
    // margins for every case here, so the comparison is meaningful
    struct Case { double c; unsigned k; Rational cr; };
    for (const Case& tc : {Case{1.0 / 6, 3, Rational(1, 6)}, Case{0.25, 4, Rational(1, 4)},
                           Case{1.0, 2, Rational(1)}}) {
        for (std::uint64_t n : {1ull, 5ull, 50ull}) {
            TailBound b = integral_test_tail({tc.cr, tc.k}, n);
            double s = 0.0;
            for (std::uint64_t p = 1000000; p > n; --p) // small terms first
                s += tc.c / std::pow(double(p), int(tc.k));
            Rational approx = Rational::from_double(s);
            CHECK(approx > b.lower);
            CHECK(approx < b.upper);
        }
    }

    // the quoted instance: tail of 1/p^2 after n = 1 lies in (1/2, 1) and
    // sums to zeta(2) - 1 = 0.644934...
    double s = 0.0;
    for (std::uint64_t p = 1000000; p >= 2; --p) s += 1.0 / (double(p) * double(p));
    CHECK(s > 0.5);
    CHECK(s < 1.0);
    CHECK(s == doctest::Approx(0.644934).epsilon(1e-4));

    // exact rational spot check at the smallest index: a short partial tail
    // already clears the lower bound, and every partial stays below the upper
    Rational partial(0);
    for (std::uint64_t p = 2; p <= 200; ++p) partial += Rational(1) / pow(Rational(p), 2);
    TailBound b = integral_test_tail({Rational(1), 2}, 1);
    CHECK(b.lower == Rational(1, 2));
    CHECK(b.upper == Rational(1));
    CHECK(partial > b.lower);
    CHECK(partial < b.upper);
}

TEST_CASE("tail width shrinks with n") {
    Rational prev_width = Rational(1);
    for (std::uint64_t n : {1ull, 2ull, 4ull, 8ull, 16ull, 32ull}) {
        TailBound b = integral_test_tail({Rational(1, 6), 3}, n);
        CHECK(b.upper - b.lower < prev_width);
        prev_width = b.upper - b.lower;
    }
}

TEST_CASE("combined sliver-tail sandwich") {
    TailBound s10 = sigma_tail_sandwich(10);
    CHECK(s10.lower == Rational(1, 1452) - Rational(1, 12000));
    CHECK(s10.upper == Rational(1, 1200));
    // the algebraic simplification of the lower endpoint
    CHECK(s10.lower > Rational(1, 1200) - Rational(1, 4000));
    CHECK_THROWS_AS(sigma_tail_sandwich(1), std::domain_error);
}

TEST_CASE("sandwich holds the certified sigma tail, cross-module") {
    GammaEnclosure gamma = gamma_enclosure(10000);
    for (std::uint64_t n : {2ull, 3ull, 10ull, 100ull, 500ull}) {
        TailBound b = sigma_tail_sandwich(n);
        Interval tail = sigma_tail(n, gamma);
        CHECK(tail.lo() > b.lower);
        CHECK(tail.hi() < b.upper);
    }
}

TEST_CASE("final algebraic inequality by exact arithmetic") {
    // 1/(12(n+1)^2) - 1/(12n^3) > 1/(12n^2) - 1/(4n^3)
    for (std::uint64_t n = 1; n <= 3000; ++n) {
        Rational lhs = Rational(1) / (Rational(12) * pow(Rational(n + 1), 2)) -
                       Rational(1) / (Rational(12) * pow(Rational(n), 3));
        CHECK(lhs > sigma_sandwich_lower_simplified(n));
    }
    // and far out
    for (std::uint64_t n : {100000ull, 10000000ull, 1000000000ull}) {
        Rational lhs = Rational(1) / (Rational(12) * pow(Rational(n + 1), 2)) -
                       Rational(1) / (Rational(12) * pow(Rational(n), 3));
        CHECK(lhs > sigma_sandwich_lower_simplified(n));
    }
}
