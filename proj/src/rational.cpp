#include "certharm/rational.hpp"

#include <ostream>
#include <stdexcept>

namespace certharm {

// unsigned long is 64-bit on every platform we target
static_assert(sizeof(unsigned long) == 8);

Rational::Rational(std::int64_t num, std::int64_t den) {
    if (den == 0) throw std::domain_error("Rational: zero denominator");
    q_ = mpq_class(mpz_class(static_cast<long>(num)), mpz_class(static_cast<long>(den)));
    q_.canonicalize();
}

Rational::Rational(const mpz_class& num, const mpz_class& den) {
    if (sgn(den) == 0) throw std::domain_error("Rational: zero denominator");
    q_ = mpq_class(num, den);
    q_.canonicalize();
}

Rational::Rational(mpq_class q) : q_(std::move(q)) {
    if (sgn(q_.get_den()) == 0) throw std::domain_error("Rational: zero denominator");
    q_.canonicalize();
}

Rational Rational::from_string(const std::string& s) {
    auto dot = s.find('.');
    if (dot != std::string::npos) {
        // decimal literal: scale the fractional part by a power of ten
        std::string digits = s.substr(0, dot) + s.substr(dot + 1);
        mpz_class num(digits, 10);
        mpz_class den(1);
        for (std::size_t i = dot + 1; i < s.size(); ++i) den *= 10;
        return Rational(num, den);
    }
    mpq_class q;
    if (q.set_str(s, 10) != 0) throw std::invalid_argument("Rational: cannot parse '" + s + "'");
    if (sgn(q.get_den()) == 0) throw std::domain_error("Rational: zero denominator");
    q.canonicalize();
    return Rational(std::move(q));
}

Rational Rational::from_double(double x) {
    mpq_class q;
    mpq_set_d(q.get_mpq_t(), x);
    return Rational(std::move(q));
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("Rational: division by zero");
    q_ /= o.q_;
    return *this;
}

std::string Rational::to_string() const {
    return q_.get_str();
}

std::string Rational::to_decimal(int digits) const {
    if (digits < 0) throw std::invalid_argument("to_decimal: negative digit count");
    mpz_class scale(1);
    for (int i = 0; i < digits; ++i) scale *= 10;
    mpz_class scaled;
    // truncation toward zero
    mpz_tdiv_q(scaled.get_mpz_t(), mpz_class(numerator() * scale).get_mpz_t(),
               denominator().get_mpz_t());
    bool neg = sgn(scaled) < 0;
    mpz_class a = ::abs(scaled);
    std::string s = a.get_str();
    if (static_cast<int>(s.size()) <= digits)
        s.insert(0, std::string(digits + 1 - s.size(), '0'));
    std::string out;
    if (neg) out = "-";
    out += s.substr(0, s.size() - digits);
    if (digits > 0) {
        out += '.';
        out += s.substr(s.size() - digits);
    }
    if (neg && sgn(a) == 0) out.erase(0, 1); // -0.000 -> 0.000
    return out;
}

Rational abs(const Rational& x) {
    return x.sign() < 0 ? -x : x;
}

Rational reciprocal(const Rational& x) {
    if (x.is_zero()) throw std::domain_error("reciprocal of zero");
    return Rational(1) / x;
}

Rational pow(const Rational& x, unsigned k) {
    mpz_class num, den;
    mpz_pow_ui(num.get_mpz_t(), x.numerator().get_mpz_t(), k);
    mpz_pow_ui(den.get_mpz_t(), x.denominator().get_mpz_t(), k);
    return Rational(num, den);
}

namespace {

Rational round_to_bits(const Rational& x, unsigned bits, bool up) {
    mpz_class num = x.numerator();
    mpz_class q;
    num <<= bits;
    if (up)
        mpz_cdiv_q(q.get_mpz_t(), num.get_mpz_t(), x.denominator().get_mpz_t());
    else
        mpz_fdiv_q(q.get_mpz_t(), num.get_mpz_t(), x.denominator().get_mpz_t());
    mpz_class den(1);
    den <<= bits;
    return Rational(q, den);
}

} // namespace

Rational round_down_to_bits(const Rational& x, unsigned bits) {
    return round_to_bits(x, bits, false);
}

Rational round_up_to_bits(const Rational& x, unsigned bits) {
    return round_to_bits(x, bits, true);
}

std::ostream& operator<<(std::ostream& os, const Rational& x) {
    return os << x.to_string();
}

} // namespace certharm
