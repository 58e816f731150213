#include "certharm/table.hpp"

#include "certharm/approx.hpp"
#include "certharm/gamma.hpp"
#include "certharm/harmonic.hpp"

#include <ostream>
#include <sstream>
#include <stdexcept>

namespace certharm {

namespace {

// |x| for an interval: [0, max] when it straddles zero
Interval interval_abs(const Interval& x) {
    if (x.lo().sign() >= 0) return x;
    if (x.hi().sign() <= 0) return -x;
    return Interval(Rational(0), std::max(-x.lo(), x.hi()));
}

struct MethodColumn {
    std::string name;
    Interval value;
    std::optional<Rational> bound;
};

MethodColumn evaluate_method(const std::string& method, std::uint64_t n,
                             const GammaEnclosure& gamma, PrecisionBudget budget) {
    if (method == "naive")
        return {method, Interval(Rational::from_double(naive_float_sum(n))), std::nullopt};
    if (method == "young") {
        ApproxResult r = approx_young(n, gamma, budget);
        return {method, r.value, r.certified_abs_error_bound};
    }
    if (method == "quadratic") {
        ApproxResult r = approx_quadratic(n, gamma, budget);
        return {method, r.value, r.certified_abs_error_bound};
    }
    if (method.rfind("em:", 0) == 0) {
        auto level = em_level_from_name(method.substr(3));
        if (!level) throw std::invalid_argument("unknown truncation level '" + method + "'");
        EmTruncation t = approx_euler_maclaurin(n, *level, gamma, budget);
        // certified bound only where the next term is on the ladder
        std::optional<Rational> bound;
        if (t.first_omitted && n >= 2) bound = abs(*t.first_omitted) + t.value.width();
        return {method, t.value, std::move(bound)};
    }
    throw std::invalid_argument("unknown method '" + method + "'");
}

} // namespace

void write_table(std::ostream& os, const TableOptions& options) {
    if (options.from == 0 || options.to < options.from || options.step == 0)
        throw std::invalid_argument("table: need 1 <= from <= to and step >= 1");
    if (options.digits < 1) throw std::invalid_argument("table: digits must be >= 1");

    std::uint64_t source = options.gamma_source ? options.gamma_source
                                                : default_gamma_source(options.to);
    GammaEnclosure gamma = gamma_enclosure(source, options.budget);
    const char sep = options.separator;

    os << "n" << sep << "method" << sep << "value" << sep << "abs_error" << sep
       << "certified_bound" << sep << "within_bound" << "\n";

    for (std::uint64_t n = options.from; n <= options.to; n += options.step) {
        Rational h = harmonic_exact(n);
        for (const std::string& method : options.methods) {
            MethodColumn col = evaluate_method(method, n, gamma, options.budget);
            Interval err = interval_abs(Interval(h) - col.value);
            os << n << sep << col.name << sep << agreed_decimal(col.value, options.digits) << sep
               << agreed_decimal(err, options.digits) << sep;
            if (col.bound) {
                if (!(err.hi() <= *col.bound)) {
                    // never emit a row whose certification does not check out
                    std::ostringstream what;
                    what << "table: cannot certify |error| <= bound at n=" << n << " method="
                         << col.name << " (|error| in " << err.to_string() << ", bound "
                         << col.bound->to_string() << ")";
                    throw std::logic_error(what.str());
                }
                os << col.bound->to_decimal(options.digits) << sep << "1";
            } else {
                os << sep;
            }
            os << "\n";
        }
    }
}

std::string table_to_string(const TableOptions& options) {
    std::ostringstream os;
    write_table(os, options);
    return os.str();
}

} // namespace certharm
