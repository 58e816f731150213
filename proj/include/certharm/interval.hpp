#pragma once

#include "certharm/rational.hpp"

#include <string>

namespace certharm {

// Closed interval with exact rational endpoints.  Every operation returns an
// enclosure: the true real result of the operation on any members of the
// operand intervals lies in the result.  Since the endpoints are rational and
// all endpoint arithmetic is exact, the only widening ever introduced is by
// construction (e.g. the tail bound of a log series), never by rounding.
class Interval {
public:
    Interval() : lo_(0), hi_(0) {}
    explicit Interval(Rational point) : lo_(point), hi_(std::move(point)) {}
    Interval(Rational lo, Rational hi);

    const Rational& lo() const { return lo_; }
    const Rational& hi() const { return hi_; }
    Rational width() const { return hi_ - lo_; }
    Rational midpoint() const { return (lo_ + hi_) / Rational(2); }

    bool is_point() const { return lo_ == hi_; }
    bool contains(const Rational& x) const { return lo_ <= x && x <= hi_; }
    bool contains(const Interval& o) const { return lo_ <= o.lo_ && o.hi_ <= hi_; }
    bool intersects(const Interval& o) const { return lo_ <= o.hi_ && o.lo_ <= hi_; }

    // sign-definite tests (strict: endpoint excluded)
    bool strictly_positive() const { return lo_.sign() > 0; }
    bool strictly_negative() const { return hi_.sign() < 0; }
    bool contains_zero() const { return lo_.sign() <= 0 && hi_.sign() >= 0; }

    Interval operator-() const { return Interval(-hi_, -lo_); }

    friend Interval operator+(const Interval& a, const Interval& b) {
        return Interval(a.lo_ + b.lo_, a.hi_ + b.hi_);
    }
    friend Interval operator-(const Interval& a, const Interval& b) {
        return Interval(a.lo_ - b.hi_, a.hi_ - b.lo_);
    }
    friend Interval operator*(const Interval& a, const Interval& b);
    // requires 0 not in b
    friend Interval operator/(const Interval& a, const Interval& b);

    friend Interval operator+(const Interval& a, const Rational& b) { return a + Interval(b); }
    friend Interval operator+(const Rational& a, const Interval& b) { return Interval(a) + b; }
    friend Interval operator-(const Interval& a, const Rational& b) { return a - Interval(b); }
    friend Interval operator-(const Rational& a, const Interval& b) { return Interval(a) - b; }
    friend Interval operator*(const Interval& a, const Rational& b) { return a * Interval(b); }
    friend Interval operator*(const Rational& a, const Interval& b) { return Interval(a) * b; }
    friend Interval operator/(const Interval& a, const Rational& b) { return a / Interval(b); }

    friend bool operator==(const Interval& a, const Interval& b) {
        return a.lo_ == b.lo_ && a.hi_ == b.hi_;
    }

    std::string to_string() const;

private:
    Rational lo_, hi_;
};

// 1/x as an enclosure; requires 0 not in x.
Interval reciprocal(const Interval& x);

// Smallest interval containing both operands.
Interval hull(const Interval& a, const Interval& b);

// Outward rounding to the grid of multiples of 2^-bits: lo is rounded down,
// hi up.  Keeps endpoint denominators bounded (they divide 2^bits) at the
// cost of at most 2^(1-bits) extra width.
Interval round_out(const Interval& x, unsigned bits);

// Longest decimal prefix shared by the truncations of lo and hi, at most
// `max_digits` fractional digits.  Every printed digit is correct for any
// value in the interval.  Returns the count of agreed fractional digits via
// the out-parameter when non-null.
std::string agreed_decimal(const Interval& x, int max_digits, int* agreed_digits = nullptr);

} // namespace certharm
