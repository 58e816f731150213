#include "certharm/log_enclosure.hpp"

#include <map>
#include <mutex>
#include <stdexcept>
#include <utility>

namespace certharm {

namespace {

// [S, S + tail] enclosing atanh(t) for 0 <= t < 1, summing `terms` terms of
// the odd series.  All arithmetic exact.  The partial sum is accumulated in
// integers over the common denominator L * q^(2J-1) (L = lcm of the odd
// reciprocals), which needs a single canonicalization instead of one per
// term.
Interval atanh_enclosure(const Rational& t, unsigned terms) {
    if (t.sign() < 0 || t >= Rational(1)) throw std::domain_error("atanh_enclosure: t outside [0,1)");
    if (t.is_zero()) return Interval(Rational(0));

    const mpz_class& p = t.numerator();
    const mpz_class& q = t.denominator();
    const unsigned J = terms;

    mpz_class L(1);
    for (unsigned j = 0; j < J; ++j) mpz_lcm_ui(L.get_mpz_t(), L.get_mpz_t(), 2 * j + 1);

    mpz_class p2 = p * p, q2 = q * q;
    mpz_class pp = p; // p^(2j+1)
    mpz_class qq;     // q^(2(J-1-j))
    mpz_pow_ui(qq.get_mpz_t(), q2.get_mpz_t(), J - 1);
    mpz_class numerator(0), coeff;
    for (unsigned j = 0; j < J; ++j) {
        mpz_divexact_ui(coeff.get_mpz_t(), L.get_mpz_t(), 2 * j + 1);
        numerator += coeff * pp * qq;
        if (j + 1 < J) {
            pp *= p2;
            mpz_divexact(qq.get_mpz_t(), qq.get_mpz_t(), q2.get_mpz_t());
        }
    }
    mpz_class qJ; // q^(2J-1)
    mpz_pow_ui(qJ.get_mpz_t(), q.get_mpz_t(), 2 * J - 1);
    Rational sum(numerator, L * qJ);

    // bound the dropped tail by the geometric series of ratio t^2; after
    // argument reduction t <= 1/3, so 1/(1 - t^2) <= 9/8 gives a one-shot
    // sound overestimate
    Rational tail;
    if (3 * p <= q) {
        tail = Rational(9 * (pp * p2), mpz_class(8 * (2 * J + 1)) * (qJ * q2));
    } else {
        Rational power(pp * p2, qJ * q2); // t^(2J+1)
        tail = power / (Rational(2 * static_cast<unsigned long>(J) + 1) * (Rational(1) - t * t));
    }
    return Interval(sum, sum + tail);
}

// k with 2^k <= x < 2^(k+1)
long floor_log2(const Rational& x) {
    long k = static_cast<long>(mpz_sizeinbase(x.numerator().get_mpz_t(), 2)) -
             static_cast<long>(mpz_sizeinbase(x.denominator().get_mpz_t(), 2));
    auto pow2 = [](long e) {
        mpz_class num(1), den(1);
        if (e >= 0) num <<= static_cast<unsigned>(e);
        else den <<= static_cast<unsigned>(-e);
        return Rational(num, den);
    };
    while (pow2(k) > x) --k;
    while (pow2(k + 1) <= x) ++k;
    return k;
}

} // namespace

Interval log2_enclosure(PrecisionBudget budget) {
    static std::mutex mu;
    static std::map<unsigned, Interval> cache;
    std::scoped_lock lock(mu);
    auto it = cache.find(budget.terms);
    if (it != cache.end()) return it->second;
    Interval r = Rational(2) * atanh_enclosure(Rational(1, 3), budget.terms);
    cache.emplace(budget.terms, r);
    return r;
}

Interval log_enclosure(const Rational& x, PrecisionBudget budget) {
    if (x.sign() <= 0) throw std::domain_error("log_enclosure: argument must be positive");

    long k = floor_log2(x);
    mpz_class num = x.numerator(), den = x.denominator();
    if (k >= 0) den <<= static_cast<unsigned>(k);
    else num <<= static_cast<unsigned>(-k);
    Rational m(num, den); // in [1, 2)

    Rational t = (m - Rational(1)) / (m + Rational(1)); // in [0, 1/3)
    Interval ln_m = Rational(2) * atanh_enclosure(t, budget.terms);
    if (k == 0) return ln_m;
    return Rational(k) * log2_enclosure(budget) + ln_m;
}

Interval log_enclosure(std::uint64_t n, PrecisionBudget budget) {
    if (n == 0) throw std::domain_error("log_enclosure: argument must be positive");
    if (n == 1) return Interval(Rational(0));
    // integer arguments reduce without any rational arithmetic:
    // t = (n - 2^k) / (n + 2^k)
    int k = 63 - __builtin_clzll(n);
    std::uint64_t pow2 = std::uint64_t(1) << k;
    Rational t(mpz_class(n - pow2), mpz_class(n + pow2));
    Interval ln_m = Rational(2) * atanh_enclosure(t, budget.terms);
    return Rational(k) * log2_enclosure(budget) + ln_m;
}

} // namespace certharm
