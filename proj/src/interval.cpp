#include "certharm/interval.hpp"

#include <algorithm>
#include <stdexcept>

namespace certharm {

Interval::Interval(Rational lo, Rational hi) : lo_(std::move(lo)), hi_(std::move(hi)) {
    if (lo_ > hi_) throw std::invalid_argument("Interval: lo > hi");
}

Interval operator*(const Interval& a, const Interval& b) {
    // scaling by a point is by far the common case in the kernels
    if (a.is_point()) {
        if (a.lo_.sign() >= 0) return Interval(a.lo_ * b.lo_, a.lo_ * b.hi_);
        return Interval(a.lo_ * b.hi_, a.lo_ * b.lo_);
    }
    if (b.is_point()) return b * a;
    Rational p1 = a.lo_ * b.lo_;
    Rational p2 = a.lo_ * b.hi_;
    Rational p3 = a.hi_ * b.lo_;
    Rational p4 = a.hi_ * b.hi_;
    Rational lo = std::min(std::min(p1, p2), std::min(p3, p4));
    Rational hi = std::max(std::max(p1, p2), std::max(p3, p4));
    return Interval(std::move(lo), std::move(hi));
}

Interval reciprocal(const Interval& x) {
    if (x.contains_zero()) throw std::domain_error("Interval: reciprocal of interval containing zero");
    return Interval(reciprocal(x.hi()), reciprocal(x.lo()));
}

Interval operator/(const Interval& a, const Interval& b) {
    return a * reciprocal(b);
}

Interval hull(const Interval& a, const Interval& b) {
    return Interval(std::min(a.lo(), b.lo()), std::max(a.hi(), b.hi()));
}

Interval round_out(const Interval& x, unsigned bits) {
    return Interval(round_down_to_bits(x.lo(), bits), round_up_to_bits(x.hi(), bits));
}

std::string Interval::to_string() const {
    return "[" + lo_.to_string() + ", " + hi_.to_string() + "]";
}

std::string agreed_decimal(const Interval& x, int max_digits, int* agreed_digits) {
    // Truncations toward zero agree at d digits iff they agree at every
    // d' < d, so scan down from the requested precision.
    for (int d = max_digits; d >= 0; --d) {
        std::string lo = x.lo().to_decimal(d);
        std::string hi = x.hi().to_decimal(d);
        if (lo == hi) {
            if (agreed_digits) *agreed_digits = d;
            return lo;
        }
    }
    if (agreed_digits) *agreed_digits = -1;
    return "";
}

} // namespace certharm
