#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>

namespace certharm {

// Arbitrary-precision rational number, always held in canonical form:
// denominator > 0 and gcd(|numerator|, denominator) = 1.  All arithmetic is
// exact; this is the backbone every certified quantity is built on.
class Rational {
public:
    Rational() : q_(0) {}
    Rational(int n) : q_(static_cast<long>(n)) {}
    Rational(long n) : q_(n) {}
    Rational(unsigned long n) : q_(n) {}
    Rational(std::int64_t num, std::int64_t den);
    Rational(const mpz_class& num, const mpz_class& den);

    explicit Rational(mpq_class q);

    // Parses "p", "p/q" or a decimal literal like "-0.25" (all exact).
    static Rational from_string(const std::string& s);
    // Exact value of the double's binary representation.
    static Rational from_double(double x);

    const mpz_class& numerator() const { return q_.get_num(); }
    const mpz_class& denominator() const { return q_.get_den(); }
    const mpq_class& raw() const { return q_; }

    bool is_zero() const { return sgn(q_) == 0; }
    int sign() const { return sgn(q_); }

    Rational operator-() const { return Rational(mpq_class(-q_)); }
    Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
    Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
    Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return mpq_equal(a.q_.get_mpq_t(), b.q_.get_mpq_t()) != 0;
    }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        int c = mpq_cmp(a.q_.get_mpq_t(), b.q_.get_mpq_t());
        return c <=> 0;
    }

    // "p/q", or just "p" for integers.
    std::string to_string() const;
    // Fixed-point decimal, truncated toward zero, with exactly `digits`
    // fractional digits.  "-0.00...0" is normalized to "0.00...0" so that a
    // shared truncation of two nearby values compares equal as a string.
    std::string to_decimal(int digits) const;

    double to_double() const { return q_.get_d(); }

private:
    mpq_class q_;
};

Rational abs(const Rational& x);
Rational reciprocal(const Rational& x);
// x^k for k >= 0 (0^0 = 1).
Rational pow(const Rational& x, unsigned k);

// Largest multiple of 2^-bits that is <= x (round_down) / smallest >= x
// (round_up).  Used to keep endpoint denominators bounded: the result's
// denominator divides 2^bits and the perturbation is below 2^-bits.
Rational round_down_to_bits(const Rational& x, unsigned bits);
Rational round_up_to_bits(const Rational& x, unsigned bits);

std::ostream& operator<<(std::ostream& os, const Rational& x);

} // namespace certharm
