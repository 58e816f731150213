#include "certharm/bench.hpp"
#include "certharm/errors.hpp"
#include "certharm/gamma.hpp"
#include "certharm/table.hpp"
#include "certharm/verify.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

// exit codes: 0 pass, 1 verification failure, 2 usage error, 3 precision
// insufficiency
constexpr int kExitPass = 0;
constexpr int kExitVerificationFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitPrecision = 3;

using namespace certharm;

std::vector<std::string> split_csv(const std::string& s) {
    std::vector<std::string> parts;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty()) parts.push_back(item);
    return parts;
}

int cmd_verify(const std::string& suite_arg, const VerifyOptions& options, const std::string& out_path) {
    auto suite = suite_from_name(suite_arg);
    if (!suite) {
        std::cerr << "unknown suite '" << suite_arg << "'\n";
        return kExitUsage;
    }
    std::vector<VerificationReport> reports;
    if (*suite == Suite::All)
        reports = run_all_suites(options);
    else
        reports.push_back(run_suite(*suite, options));

    std::ostringstream text;
    bool all_passed = true;
    for (const auto& r : reports) {
        text << format_report(r) << "\n";
        all_passed = all_passed && r.passed();
    }
    std::cout << text.str();
    if (!out_path.empty()) {
        std::ofstream out(out_path);
        if (!out) {
            std::cerr << "cannot open '" << out_path << "' for writing\n";
            return kExitUsage;
        }
        out << text.str();
    }
    return all_passed ? kExitPass : kExitVerificationFailure;
}

int cmd_gamma(std::uint64_t n, int digits) {
    // refuse requests the bound 1/(4n^3) cannot possibly meet, and suggest
    // the smallest index that can
    mpz_class need;
    mpz_ui_pow_ui(need.get_mpz_t(), 10, static_cast<unsigned long>(digits));
    mpz_class four_n_cubed = 4 * mpz_class(static_cast<unsigned long>(n)) *
                             mpz_class(static_cast<unsigned long>(n)) *
                             mpz_class(static_cast<unsigned long>(n));
    if (four_n_cubed <= need) {
        mpz_class m;
        mpz_root(m.get_mpz_t(), mpz_class(need / 4).get_mpz_t(), 3);
        m += 1;
        std::cerr << digits << " digits are unachievable at n=" << n
                  << " (enclosure width is at least 1/(4n^3)); smallest sufficient n is " << m.get_str()
                  << "\n";
        return kExitPrecision;
    }
    // budget: ~0.95 agreed decimal digits per series term; keep the ln width
    // an order of magnitude below the requested precision
    unsigned terms = std::max(40u, static_cast<unsigned>((digits + 10) * 11 / 10));
    GammaEnclosure g = gamma_enclosure(n, PrecisionBudget(terms));
    int agreed = 0;
    std::string prefix = agreed_decimal(g.interval(), digits, &agreed);
    std::cout << "n=" << n << "\n";
    std::cout << "lo=" << g.lo.to_decimal(digits) << "\n";
    std::cout << "hi=" << g.hi.to_decimal(digits) << "\n";
    std::cout << "agreed=" << prefix << "\n";
    std::cout << "agreed_digits=" << agreed << "\n";
    return kExitPass;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"certified harmonic numbers: exact values, enclosed approximations, proof checks"};
    app.require_subcommand(1);

    unsigned budget_terms = PrecisionBudget{}.terms;
    app.add_option("--budget", budget_terms, "log series terms (enclosure precision)");

    auto* verify = app.add_subcommand("verify", "run a verification suite over a range of n");
    std::string suite = "all";
    VerifyOptions vopt;
    vopt.max_n = 1000;
    std::string out_path;
    verify->add_option("--suite", suite, "all|epsilon|theta|sigma|tails|em|oresme|identities");
    verify->add_option("--max-n", vopt.max_n, "upper end of the sweep")->check(CLI::Range(std::uint64_t(2), std::uint64_t(100000000)));
    verify->add_option("--gamma-n-source", vopt.gamma_source, "index gamma is derived at (default: per suite)");
    verify->add_option("--threads", vopt.threads, "worker threads (0 = hardware)");
    verify->add_option("--seed", vopt.seed, "seed for randomized identity pairs");
    verify->add_option("--out", out_path, "also write the report to this file");

    auto* table = app.add_subcommand("table", "write an approximation comparison table (CSV)");
    TableOptions topt;
    std::string methods_arg = "quadratic";
    std::string format = "csv";
    table->add_option("--from", topt.from, "first n")->check(CLI::PositiveNumber);
    table->add_option("--to", topt.to, "last n")->check(CLI::PositiveNumber);
    table->add_option("--step", topt.step, "stride")->check(CLI::PositiveNumber);
    table->add_option("--methods", methods_arg, "comma list: naive,young,quadratic,em:LEVEL");
    table->add_option("--digits", topt.digits, "decimal digits per value")->check(CLI::PositiveNumber);
    table->add_option("--format", format, "csv|tsv");
    table->add_option("--gamma-n-source", topt.gamma_source, "index gamma is derived at");

    auto* gamma = app.add_subcommand("gamma", "print a certified enclosure of Euler's constant");
    std::uint64_t gamma_n_arg = 10000;
    int gamma_digits = 15;
    gamma->add_option("--n", gamma_n_arg, "index to derive the enclosure at")->check(CLI::PositiveNumber);
    gamma->add_option("--digits", gamma_digits, "requested decimal digits")->check(CLI::PositiveNumber);

    auto* bench = app.add_subcommand("bench", "time naive summation against the closed form");
    BenchOptions bopt;
    bench->add_option("--n", bopt.n_values, "values of n (repeatable)")->check(CLI::PositiveNumber);
    bench->add_option("--reps", bopt.reps, "repetitions per timing")->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*verify) {
            vopt.budget = PrecisionBudget(budget_terms);
            return cmd_verify(suite, vopt, out_path);
        }
        if (*table) {
            topt.budget = PrecisionBudget(budget_terms);
            topt.methods = split_csv(methods_arg);
            if (format == "tsv") topt.separator = '\t';
            else if (format != "csv") throw std::invalid_argument("unknown format '" + format + "'");
            write_table(std::cout, topt);
            return kExitPass;
        }
        if (*gamma) {
            return cmd_gamma(gamma_n_arg, gamma_digits);
        }
        if (*bench) {
            if (budget_terms != PrecisionBudget{}.terms) bopt.budget = PrecisionBudget(budget_terms);
            write_bench(std::cout, run_bench(bopt));
            return kExitPass;
        }
    } catch (const precision_error& e) {
        std::cerr << "precision: " << e.what() << " (n=" << e.index() << ")\n";
        return kExitPrecision;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::domain_error& e) {
        std::cerr << "usage: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::overflow_error& e) {
        std::cerr << "limit: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::logic_error& e) {
        // a row or report that failed its own certification
        std::cerr << "verification failure: " << e.what() << "\n";
        return kExitVerificationFailure;
    }
    return kExitUsage;
}
