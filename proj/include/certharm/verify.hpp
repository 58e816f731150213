#pragma once

#include "certharm/log_enclosure.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace certharm {

// Named sweeps, one per family of inequalities/identities.  Each check is
// decided by strict comparison of exact rational interval endpoints; an
// interval that straddles its threshold is reported as a precision failure
// (precision_error), never as a pass or a counterexample.
enum class Suite {
    Epsilon,    // 0 < eps_n < 1/(4n^3)
    Theta,      // 0 < theta_n < 1
    Sigma,      // sliver bracket 1/(6n^3) - 1/(4n^4) < sigma_n < 1/(6n^3)
    Tails,      // sigma-tail sandwich and its algebraic lower-bound step
    Em,         // truncation error below first omitted term, matching sign
    Oresme,     // H_{2^k} > 1 + k/2, strict
    Identities, // split identity, telescoping, summation-path equivalence
    All,
};

const char* suite_name(Suite suite);
std::optional<Suite> suite_from_name(const std::string& name);

struct CheckFailure {
    std::uint64_t n;
    std::string check_id;
    std::string lhs; // offending value (decimal)
    std::string rhs; // bound it was compared against (decimal)
};

struct VerificationReport {
    std::string suite;
    std::uint64_t n_min = 1;
    std::uint64_t n_max = 0;
    std::uint64_t gamma_source = 0; // 0: suite does not use gamma
    std::uint64_t checks_run = 0;
    std::vector<CheckFailure> failures;
    // boundary cases and measured-only results, documented rather than asserted
    std::vector<std::string> notes;

    bool passed() const { return failures.empty(); }
};

struct VerifyOptions {
    std::uint64_t max_n = 1000;
    PrecisionBudget budget{};
    // Index gamma is derived at; 0 picks the per-suite default.  The generic
    // default is max(10^4, 10 max_n); the Em suite needs a far larger one
    // (see em_gamma_source) because its margins shrink like n^-6 and n^-8.
    std::uint64_t gamma_source = 0;
    unsigned threads = 0; // 0: hardware concurrency
    std::uint64_t telescoping_pairs = 50;
    std::uint64_t seed = 0x5eed5eed;
};

std::uint64_t em_gamma_source(std::uint64_t max_n);

VerificationReport run_suite(Suite suite, const VerifyOptions& options);

// Every concrete suite in order; used by Suite::All and the CLI.
std::vector<VerificationReport> run_all_suites(const VerifyOptions& options);

std::string format_report(const VerificationReport& report);

} // namespace certharm
