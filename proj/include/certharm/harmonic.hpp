#pragma once

#include "certharm/rational.hpp"

#include <cstdint>

namespace certharm {

// Exact H_n = 1 + 1/2 + ... + 1/n by divide-and-conquer (binary splitting)
// summation; falls back to sequential accumulation below 64 terms.
// Throws std::domain_error for n = 0.
Rational harmonic_exact(std::uint64_t n);

// Exact sum of 1/r over r in [first, last] (inclusive), same algorithm.
Rational harmonic_range(std::uint64_t first, std::uint64_t last);

// Incremental exact harmonic numbers for sweeps: one rational addition per
// step instead of a fresh summation.  Built with the default constructor it
// is a computation path fully independent of harmonic_exact, so the two can
// be compared against each other.
class HarmonicAccumulator {
public:
    // starts at n = 1, H = 1
    HarmonicAccumulator() : n_(1), h_(1) {}
    // starts mid-sequence (seeded by harmonic_exact; used by chunked sweeps)
    explicit HarmonicAccumulator(std::uint64_t n);

    std::uint64_t n() const { return n_; }
    const Rational& value() const { return h_; }

    void advance() {
        ++n_;
        h_ += Rational(std::int64_t(1), static_cast<std::int64_t>(n_));
    }

private:
    std::uint64_t n_;
    Rational h_;
};

// Exact strict test of H_{2^k} > 1 + k/2.  The inequality holds for every
// k >= 2; at k = 0 and k = 1 the two sides are equal, so the strict
// comparison is false there and this function reports that honestly.
// Throws std::overflow_error when k exceeds max_k (guards against
// accidentally huge summations).
bool oresme_check(unsigned k, unsigned max_k = 24);

} // namespace certharm
