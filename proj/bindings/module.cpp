#include "certharm/approx.hpp"
#include "certharm/bench.hpp"
#include "certharm/errors.hpp"
#include "certharm/gamma.hpp"
#include "certharm/geometry.hpp"
#include "certharm/harmonic.hpp"
#include "certharm/interval.hpp"
#include "certharm/log_enclosure.hpp"
#include "certharm/rational.hpp"
#include "certharm/series_bounds.hpp"
#include "certharm/table.hpp"
#include "certharm/verify.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace certharm;

namespace {

py::object mpz_to_pyint(const mpz_class& z) {
    PyObject* obj = PyLong_FromString(z.get_str().c_str(), nullptr, 10);
    if (!obj) throw py::error_already_set();
    return py::reinterpret_steal<py::object>(obj);
}

Rational rational_from_ints(const py::int_& num, const py::int_& den) {
    return Rational(mpz_class(std::string(py::str(num))), mpz_class(std::string(py::str(den))));
}

} // namespace

PYBIND11_MODULE(_certharm, m) {
    m.doc() = "exact harmonic numbers, certified enclosures, and the inequality checks built on them";

    py::register_exception<precision_error>(m, "PrecisionError", PyExc_ArithmeticError);

    py::class_<Rational>(m, "Rational")
        .def(py::init([](const py::int_& num, const py::int_& den) {
                 return rational_from_ints(num, den);
             }),
             py::arg("numerator"), py::arg("denominator") = py::int_(1))
        .def(py::init([](const std::string& s) { return Rational::from_string(s); }))
        .def_static("from_float", &Rational::from_double)
        .def_property_readonly("numerator", [](const Rational& r) { return mpz_to_pyint(r.numerator()); })
        .def_property_readonly("denominator", [](const Rational& r) { return mpz_to_pyint(r.denominator()); })
        .def("to_decimal", &Rational::to_decimal, py::arg("digits"))
        .def("__str__", &Rational::to_string)
        .def("__repr__", [](const Rational& r) { return "Rational(" + r.to_string() + ")"; })
        .def("__float__", &Rational::to_double)
        .def("__eq__", [](const Rational& a, const Rational& b) { return a == b; }, py::is_operator())
        .def("__lt__", [](const Rational& a, const Rational& b) { return a < b; }, py::is_operator())
        .def("__le__", [](const Rational& a, const Rational& b) { return a <= b; }, py::is_operator())
        .def("__neg__", [](const Rational& a) { return -a; })
        .def("__add__", [](const Rational& a, const Rational& b) { return a + b; }, py::is_operator())
        .def("__sub__", [](const Rational& a, const Rational& b) { return a - b; }, py::is_operator())
        .def("__mul__", [](const Rational& a, const Rational& b) { return a * b; }, py::is_operator())
        .def("__truediv__", [](const Rational& a, const Rational& b) { return a / b; }, py::is_operator());

    py::class_<Interval>(m, "Interval")
        .def(py::init<Rational>())
        .def(py::init<Rational, Rational>())
        .def_property_readonly("lo", &Interval::lo)
        .def_property_readonly("hi", &Interval::hi)
        .def("width", &Interval::width)
        .def("midpoint", &Interval::midpoint)
        .def("contains", [](const Interval& iv, const Rational& x) { return iv.contains(x); })
        .def("contains_interval", [](const Interval& iv, const Interval& o) { return iv.contains(o); })
        .def("intersects", &Interval::intersects)
        .def("agreed_decimal",
             [](const Interval& iv, int max_digits) { return agreed_decimal(iv, max_digits); },
             py::arg("max_digits") = 30)
        .def("__repr__", [](const Interval& iv) { return iv.to_string(); });

    py::class_<PrecisionBudget>(m, "PrecisionBudget")
        .def(py::init<>())
        .def(py::init<unsigned>(), py::arg("terms"))
        .def_readwrite("terms", &PrecisionBudget::terms);

    py::class_<GammaEnclosure>(m, "GammaEnclosure")
        .def_readonly("lo", &GammaEnclosure::lo)
        .def_readonly("hi", &GammaEnclosure::hi)
        .def_readonly("derived_at", &GammaEnclosure::derived_at)
        .def("interval", &GammaEnclosure::interval)
        .def("width", &GammaEnclosure::width)
        .def("__repr__", [](const GammaEnclosure& g) {
            return "GammaEnclosure(" + agreed_decimal(g.interval(), 30) + "..., n=" +
                   std::to_string(g.derived_at) + ")";
        });

    py::class_<HarmonicRecord>(m, "HarmonicRecord")
        .def_readonly("n", &HarmonicRecord::n)
        .def_readonly("h_exact", &HarmonicRecord::h_exact)
        .def_readonly("gamma_n", &HarmonicRecord::gamma_n)
        .def_readonly("theta", &HarmonicRecord::theta)
        .def_readonly("epsilon", &HarmonicRecord::epsilon);

    py::enum_<EmLevel>(m, "EmLevel")
        .value("LOG_ONLY", EmLevel::LogOnly)
        .value("HALF_N", EmLevel::HalfN)
        .value("QUAD", EmLevel::Quad)
        .value("QUARTIC", EmLevel::Quartic)
        .value("SEXTIC", EmLevel::Sextic);

    py::enum_<ClaimStatus>(m, "ClaimStatus")
        .value("HOLDS", ClaimStatus::Holds)
        .value("VIOLATED", ClaimStatus::Violated)
        .value("UNDECIDED", ClaimStatus::Undecided);

    py::enum_<ApproxMethod>(m, "ApproxMethod")
        .value("NAIVE_SUM", ApproxMethod::NaiveSum)
        .value("YOUNG_LINEAR", ApproxMethod::YoungLinear)
        .value("QUADRATIC", ApproxMethod::Quadratic)
        .value("EULER_MACLAURIN", ApproxMethod::EulerMaclaurin);

    py::class_<EmTruncation>(m, "EmTruncation")
        .def_readonly("n", &EmTruncation::n)
        .def_readonly("level", &EmTruncation::level)
        .def_readonly("value", &EmTruncation::value)
        .def_readonly("first_omitted", &EmTruncation::first_omitted)
        .def_readonly("error", &EmTruncation::error);

    py::class_<ApproxResult>(m, "ApproxResult")
        .def_readonly("n", &ApproxResult::n)
        .def_readonly("method", &ApproxResult::method)
        .def_readonly("value", &ApproxResult::value)
        .def_readonly("certified_abs_error_bound", &ApproxResult::certified_abs_error_bound);

    py::class_<TrapezoidDecomposition>(m, "TrapezoidDecomposition")
        .def_readonly("n", &TrapezoidDecomposition::n)
        .def_readonly("rect_area", &TrapezoidDecomposition::rect_area)
        .def_readonly("triangle_area", &TrapezoidDecomposition::triangle_area)
        .def_readonly("delta", &TrapezoidDecomposition::delta)
        .def_readonly("sigma", &TrapezoidDecomposition::sigma);

    py::enum_<TailMethod>(m, "TailMethod")
        .value("LEIBNIZ", TailMethod::Leibniz)
        .value("INTEGRAL_TEST", TailMethod::IntegralTest);

    py::class_<TailBound>(m, "TailBound")
        .def_readonly("n", &TailBound::n)
        .def_readonly("lower", &TailBound::lower)
        .def_readonly("upper", &TailBound::upper)
        .def_readonly("method", &TailBound::method);

    py::class_<PowerLawTerm>(m, "PowerLawTerm")
        .def(py::init<Rational, unsigned>(), py::arg("c"), py::arg("k"))
        .def_readwrite("c", &PowerLawTerm::c)
        .def_readwrite("k", &PowerLawTerm::k);

    py::enum_<Suite>(m, "Suite")
        .value("EPSILON", Suite::Epsilon)
        .value("THETA", Suite::Theta)
        .value("SIGMA", Suite::Sigma)
        .value("TAILS", Suite::Tails)
        .value("EM", Suite::Em)
        .value("ORESME", Suite::Oresme)
        .value("IDENTITIES", Suite::Identities);

    py::class_<CheckFailure>(m, "CheckFailure")
        .def_readonly("n", &CheckFailure::n)
        .def_readonly("check_id", &CheckFailure::check_id)
        .def_readonly("lhs", &CheckFailure::lhs)
        .def_readonly("rhs", &CheckFailure::rhs);

    py::class_<VerificationReport>(m, "VerificationReport")
        .def_readonly("suite", &VerificationReport::suite)
        .def_readonly("n_min", &VerificationReport::n_min)
        .def_readonly("n_max", &VerificationReport::n_max)
        .def_readonly("gamma_source", &VerificationReport::gamma_source)
        .def_readonly("checks_run", &VerificationReport::checks_run)
        .def_readonly("failures", &VerificationReport::failures)
        .def_readonly("notes", &VerificationReport::notes)
        .def("passed", &VerificationReport::passed)
        .def("__repr__", [](const VerificationReport& r) { return format_report(r); });

    m.def("log_enclosure", py::overload_cast<const Rational&, PrecisionBudget>(&log_enclosure),
          py::arg("x"), py::arg("budget") = PrecisionBudget{});
    m.def("log2_enclosure", &log2_enclosure, py::arg("budget") = PrecisionBudget{});

    m.def("harmonic_exact", &harmonic_exact, py::arg("n"));
    m.def("harmonic_range", &harmonic_range, py::arg("first"), py::arg("last"));
    m.def("oresme_check", &oresme_check, py::arg("k"), py::arg("max_k") = 24);

    m.def("gamma_n", py::overload_cast<std::uint64_t, PrecisionBudget>(&gamma_n), py::arg("n"),
          py::arg("budget") = PrecisionBudget{});
    m.def("gamma_enclosure",
          py::overload_cast<std::uint64_t, PrecisionBudget, unsigned>(&gamma_enclosure),
          py::arg("n"), py::arg("budget") = PrecisionBudget{},
          py::arg("den_bits") = kGammaDenominatorBits);
    m.def("default_gamma_source", &default_gamma_source, py::arg("max_n"));
    m.def("residual_theta",
          py::overload_cast<std::uint64_t, const GammaEnclosure&, PrecisionBudget>(&residual_theta),
          py::arg("n"), py::arg("gamma"), py::arg("budget") = PrecisionBudget{});
    m.def("residual_epsilon",
          py::overload_cast<std::uint64_t, const GammaEnclosure&, PrecisionBudget>(&residual_epsilon),
          py::arg("n"), py::arg("gamma"), py::arg("budget") = PrecisionBudget{});
    m.def("harmonic_record", &harmonic_record, py::arg("n"), py::arg("gamma"),
          py::arg("budget") = PrecisionBudget{});

    m.def("approx_quadratic", &approx_quadratic, py::arg("n"), py::arg("gamma"),
          py::arg("budget") = PrecisionBudget{});
    m.def("approx_young", &approx_young, py::arg("n"), py::arg("gamma"),
          py::arg("budget") = PrecisionBudget{});
    m.def("approx_euler_maclaurin",
          py::overload_cast<std::uint64_t, EmLevel, const GammaEnclosure&, PrecisionBudget>(
              &approx_euler_maclaurin),
          py::arg("n"), py::arg("level"), py::arg("gamma"), py::arg("budget") = PrecisionBudget{});
    m.def("em_error_claim", &em_error_claim, py::arg("truncation"));
    m.def("naive_float_sum", &naive_float_sum, py::arg("n"));
    m.def("quadratic_error_bound", &quadratic_error_bound, py::arg("n"));
    m.def("young_error_bound", &young_error_bound, py::arg("n"));

    m.def("decompose", &decompose, py::arg("n"), py::arg("budget") = PrecisionBudget{});
    m.def("delta_partial_sum", &delta_partial_sum, py::arg("n"), py::arg("N"),
          py::arg("budget") = PrecisionBudget{});
    m.def("delta_tail", &delta_tail, py::arg("n"), py::arg("gamma"),
          py::arg("budget") = PrecisionBudget{});
    m.def("sigma_tail",
          py::overload_cast<std::uint64_t, const GammaEnclosure&, PrecisionBudget>(&sigma_tail),
          py::arg("n"), py::arg("gamma"), py::arg("budget") = PrecisionBudget{});
    m.def("sigma_series_coefficient", &sigma_series_coefficient, py::arg("k"));
    m.def("sigma_series_eval", &sigma_series_eval, py::arg("n"), py::arg("K"));

    m.def("leibniz_bracket", &leibniz_bracket, py::arg("partial_sum"), py::arg("first_omitted"));
    m.def("integral_test_tail", &integral_test_tail, py::arg("term"), py::arg("n"));
    m.def("sigma_tail_sandwich", &sigma_tail_sandwich, py::arg("n"));
    m.def("sigma_sandwich_lower_simplified", &sigma_sandwich_lower_simplified, py::arg("n"));
    m.def("em_gamma_source", &em_gamma_source, py::arg("max_n"));

    m.def(
        "run_suite",
        [](Suite suite, std::uint64_t max_n, PrecisionBudget budget, std::uint64_t gamma_source,
           unsigned threads, std::uint64_t seed) {
            VerifyOptions options;
            options.max_n = max_n;
            options.budget = budget;
            options.gamma_source = gamma_source;
            options.threads = threads;
            options.seed = seed;
            py::gil_scoped_release release;
            return run_suite(suite, options);
        },
        py::arg("suite"), py::arg("max_n") = 1000, py::arg("budget") = PrecisionBudget{},
        py::arg("gamma_source") = 0, py::arg("threads") = 0, py::arg("seed") = 0x5eed5eed);
    m.def("format_report", &format_report, py::arg("report"));

    m.def(
        "table_csv",
        [](std::uint64_t from, std::uint64_t to, std::uint64_t step,
           const std::vector<std::string>& methods, int digits, bool tsv,
           std::uint64_t gamma_source, PrecisionBudget budget) {
            TableOptions options;
            options.from = from;
            options.to = to;
            options.step = step;
            options.methods = methods;
            options.digits = digits;
            options.separator = tsv ? '\t' : ',';
            options.gamma_source = gamma_source;
            options.budget = budget;
            return table_to_string(options);
        },
        py::arg("from_n"), py::arg("to_n"), py::arg("step") = 1,
        py::arg("methods") = std::vector<std::string>{"quadratic"}, py::arg("digits") = 15,
        py::arg("tsv") = false, py::arg("gamma_source") = 0,
        py::arg("budget") = PrecisionBudget{});

#ifdef VERSION_INFO
#define CERTHARM_STR(x) #x
#define CERTHARM_XSTR(x) CERTHARM_STR(x)
    m.attr("__version__") = CERTHARM_XSTR(VERSION_INFO);
#else
    m.attr("__version__") = "dev";
#endif
}
