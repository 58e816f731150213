#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "certharm/harmonic.hpp"

#include <stdexcept>

using certharm::HarmonicAccumulator;
using certharm::harmonic_exact;
using certharm::harmonic_range;
using certharm::oresme_check;
using certharm::Rational;

namespace {

// test-side oracle: plain incremental summation, no splitting
Rational oracle_harmonic(std::uint64_t n) {
    Rational s(0);
    for (std::uint64_t r = 1; r <= n; ++r) s += Rational(std::int64_t(1), static_cast<std::int64_t>(r));
    return s;
}

} // namespace

TEST_CASE("spot values") {
    CHECK(harmonic_exact(1) == Rational(1));
    CHECK(harmonic_exact(4) == Rational(25, 12));
    CHECK(harmonic_exact(10) == Rational(7381, 2520));
}

TEST_CASE("n = 0 is a domain error") {
    CHECK_THROWS_AS(harmonic_exact(0), std::domain_error);
}

TEST_CASE("binary splitting agrees with plain summation") {
    // crosses the sequential-fallback threshold at 64
    for (std::uint64_t n : {1ull, 2ull, 63ull, 64ull, 65ull, 127ull, 128ull, 200ull, 500ull})
        CHECK(harmonic_exact(n) == oracle_harmonic(n));
}

TEST_CASE("recurrence H_n - H_{n-1} = 1/n") {
    for (std::uint64_t n : {2ull, 10ull, 63ull, 64ull, 65ull, 100ull, 1000ull})
        CHECK(harmonic_exact(n) - harmonic_exact(n - 1) ==
              Rational(std::int64_t(1), static_cast<std::int64_t>(n)));
}

TEST_CASE("range summation composes") {
    CHECK(harmonic_range(1, 10) == harmonic_exact(10));
    CHECK(harmonic_range(5, 10) == harmonic_exact(10) - harmonic_exact(4));
    CHECK(harmonic_range(7, 7) == Rational(1, 7));
    CHECK_THROWS_AS(harmonic_range(0, 5), std::domain_error);
    CHECK_THROWS_AS(harmonic_range(6, 5), std::domain_error);
}

TEST_CASE("accumulator walks the sequence") {
    HarmonicAccumulator acc;
    for (std::uint64_t n = 1; n <= 300; ++n) {
        CHECK(acc.n() == n);
        CHECK(acc.value() == harmonic_exact(n));
        acc.advance();
    }
    HarmonicAccumulator seeded(1000);
    CHECK(seeded.value() == harmonic_exact(1000));
    seeded.advance();
    CHECK(seeded.value() == harmonic_exact(1001));
}

TEST_CASE("growth inequality, strict, with its boundary") {
    // H_1 = 1 and H_2 = 3/2 equal the right-hand side exactly, so the
    // strict comparison fails for k = 0 and k = 1
    CHECK(oresme_check(0) == false);
    CHECK(oresme_check(1) == false);
    CHECK(oresme_check(2) == true); // 25/12 > 2
    for (unsigned k = 2; k <= 12; ++k) CHECK(oresme_check(k));
}

TEST_CASE("size limit") {
    CHECK_THROWS_AS(oresme_check(30, 24), std::overflow_error);
    CHECK_NOTHROW(oresme_check(10, 10));
}
