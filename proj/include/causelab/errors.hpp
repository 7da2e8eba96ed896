#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace causelab {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A query, constraint or tuple refers to an undeclared relation or uses
/// the wrong arity.
class SchemaError : public Error {
public:
    using Error::Error;
};

/// An operation was applied outside its domain, e.g. asking for the
/// responsibility of an exogenous tuple.
class DomainError : public Error {
public:
    using Error::Error;
};

/// An enumeration exceeded its configured cap. Results are never truncated
/// silently.
class BudgetError : public Error {
public:
    using Error::Error;
};

/// Structurally well-formed input that breaks a data-model invariant.
class ValidationError : public Error {
public:
    using Error::Error;
};

/// Malformed input. Line and column are 1-based; 0 means the error has no
/// meaningful position (e.g. an unreadable file).
class ParseError : public Error {
public:
    ParseError(const std::string& message, std::size_t line, std::size_t column)
        : Error(line == 0 ? message
                          : std::to_string(line) + ":" + std::to_string(column) + ": " + message),
          line_(line), column_(column) {}

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

} // namespace causelab
