#include "certharm/harmonic.hpp"

#include <stdexcept>

namespace certharm {

namespace {

constexpr std::uint64_t kSequentialThreshold = 64;

// sum of 1/r over [a, b)
Rational harmonic_split(std::uint64_t a, std::uint64_t b) {
    if (b - a <= kSequentialThreshold) {
        Rational s(0);
        for (std::uint64_t r = a; r < b; ++r)
            s += Rational(std::int64_t(1), static_cast<std::int64_t>(r));
        return s;
    }
    std::uint64_t mid = a + (b - a) / 2;
    return harmonic_split(a, mid) + harmonic_split(mid, b);
}

} // namespace

Rational harmonic_exact(std::uint64_t n) {
    if (n == 0) throw std::domain_error("harmonic_exact: n must be >= 1");
    return harmonic_split(1, n + 1);
}

Rational harmonic_range(std::uint64_t first, std::uint64_t last) {
    if (first == 0 || first > last) throw std::domain_error("harmonic_range: need 1 <= first <= last");
    return harmonic_split(first, last + 1);
}

HarmonicAccumulator::HarmonicAccumulator(std::uint64_t n)
    : n_(n), h_(harmonic_exact(n)) {}

bool oresme_check(unsigned k, unsigned max_k) {
    if (k > max_k) throw std::overflow_error("oresme_check: 2^k exceeds configured limit");
    std::uint64_t n = std::uint64_t(1) << k;
    // 1 + k/2, exactly
    Rational rhs = Rational(1) + Rational(static_cast<std::int64_t>(k), 2);
    return harmonic_exact(n) > rhs;
}

} // namespace certharm
