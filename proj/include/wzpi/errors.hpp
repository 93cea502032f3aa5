#pragma once

#include <stdexcept>
#include <string>

namespace wzpi {

/// Input outside the mathematical domain of an operation (negative sqrt,
/// fractional power of a non-unit, zero polynomial where nonzero required).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// A denominator factor vanished at a point where a value was requested.
class PoleError : public DomainError {
public:
    using DomainError::DomainError;
};

/// Series whose term ratio does not tend to a limit of modulus < 1.
class DivergenceError : public DomainError {
public:
    using DomainError::DomainError;
};

/// API misuse: mixed coefficient fields, malformed structures.
class UsageError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Term or task text that does not follow the grammar.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, int line, int column)
        : std::runtime_error(what + " at " + std::to_string(line) + ":" + std::to_string(column)),
          line_(line), column_(column) {}

    int line() const noexcept { return line_; }
    int column() const noexcept { return column_; }

private:
    int line_;
    int column_;
};

} // namespace wzpi
