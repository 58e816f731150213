#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace certharm {

// Thrown when an interval is too wide to decide an inequality.  Carries the
// index at which the comparison became undecidable so callers can report it
// (the CLI maps this to its own exit code).
class precision_error : public std::runtime_error {
public:
    precision_error(std::string what, std::uint64_t n)
        : std::runtime_error(std::move(what)), n_(n) {}

    std::uint64_t index() const noexcept { return n_; }

private:
    std::uint64_t n_;
};

} // namespace certharm
