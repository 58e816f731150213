#pragma once

#include "certharm/log_enclosure.hpp"

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace certharm {

// Long-format comparison table, one row per (n, method):
//   n,method,value,abs_error,certified_bound,within_bound
// Decimal strings are truncations of certified enclosures, so every printed
// digit is correct; the abs_error column for certified methods is checked
// against the bound before the row is written, and emission fails loudly on
// a violation instead of printing it.
struct TableOptions {
    std::uint64_t from = 1;
    std::uint64_t to = 10;
    std::uint64_t step = 1;
    // "naive", "young", "quadratic", "em:log|half|quad|quartic|sextic"
    std::vector<std::string> methods = {"quadratic"};
    int digits = 15;
    char separator = ',';
    PrecisionBudget budget{};
    std::uint64_t gamma_source = 0; // 0: default_gamma_source(to)
};

// Throws std::invalid_argument for an unknown method name and
// std::logic_error if a certified row would violate its own bound.
void write_table(std::ostream& os, const TableOptions& options);

std::string table_to_string(const TableOptions& options);

} // namespace certharm
