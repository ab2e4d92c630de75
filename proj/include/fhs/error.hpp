#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace fhs {

/// Arguments violate an operation's precondition.
class invalid_input : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// The requested modulus has no cyclic unit group (or is otherwise outside
/// what the generators handle).
class unsupported_modulus : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Lookup of a named object failed.
class not_found : public std::out_of_range {
public:
    using std::out_of_range::out_of_range;
};

/// Malformed serialized input. `line` is 1-based, 0 when unknown.
class parse_error : public std::runtime_error {
public:
    parse_error(const std::string& what, std::size_t line = 0)
        : std::runtime_error(line ? "line " + std::to_string(line) + ": " + what : what),
          line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

/// Well-formed input that violates a data-model invariant.
class validation_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace fhs
