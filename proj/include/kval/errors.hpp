#pragma once

#include <stdexcept>
#include <string>

namespace kval {

// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Violated mathematical precondition (division by zero, inversion of the
// adjoined zero, argument outside the local ring, ...).
struct DomainError : Error {
    using Error::Error;
};

// Syntax error with source position. Columns are 1-based.
struct ParseError : Error {
    int line = 1;
    int column = 1;
    std::string expected;

    ParseError(const std::string& msg, int line_, int column_, std::string expected_ = {})
        : Error(msg + " at " + std::to_string(line_) + ":" + std::to_string(column_) +
                (expected_.empty() ? "" : " (expected " + expected_ + ")")),
          line(line_),
          column(column_),
          expected(std::move(expected_)) {}
};

// Binary series operation on series with different centers.
struct CenterError : Error {
    using Error::Error;
};

// Operation requires a convergence verdict that is absent or negative.
struct ConvergenceError : Error {
    using Error::Error;
};

// Formal composition precondition failure (inner constant term vs outer center).
struct CompositionError : Error {
    using Error::Error;
};

// Inversion pivot f'(x0) vanishes.
struct PivotError : Error {
    using Error::Error;
};

// A certified search (radius grid, tail domination, schedule depth) ran out
// of room before producing a certificate.
struct DepthError : Error {
    using Error::Error;
};

// Broken internal invariant. Always a bug, never a user error.
struct InternalError : Error {
    using Error::Error;
};

}  // namespace kval
