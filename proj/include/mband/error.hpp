#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace mband {

/// Caller supplied arguments outside an operation's domain.
class InvalidArgument : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Malformed CSV or config input. `row()` is the 1-based data row, 0 when the
/// failure is not tied to a row (empty input, bad header, bad encoding).
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t row = 0)
        : std::runtime_error(what), row_(row) {}

    std::size_t row() const noexcept { return row_; }

private:
    std::size_t row_;
};

/// The input is well formed but the test cannot be applied to it, e.g. a
/// series whose first differences are all equal (zero error variance).
class DegenerateInput : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

}  // namespace mband
