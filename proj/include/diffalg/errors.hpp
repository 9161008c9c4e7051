#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace diffalg {

// Base class for all recoverable kernel errors.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Syntax error with a 1-based source position.
struct ParseError : Error {
    ParseError(const std::string& what, std::size_t line, std::size_t col)
        : Error(what + " (line " + std::to_string(line) + ", col " +
                std::to_string(col) + ")"),
          line(line), col(col), message(what) {}
    std::size_t line;
    std::size_t col;
    std::string message;
};

// A denominator vanished where a value was required: distinct from a check
// that evaluates to false.
struct DefinednessError : Error {
    using Error::Error;
};

// A place of the function field the residue machinery does not support
// (irrational finite pole, irreducible nonlinear denominator factor).
struct UnsupportedPlaceError : Error {
    using Error::Error;
};

// Caller violated a stated precondition.
struct PreconditionError : Error {
    using Error::Error;
};

// A mathematically impossible state was reached.  This always indicates a
// kernel bug, never valid input, so it is a logic_error rather than Error.
struct TheoremViolation : std::logic_error {
    explicit TheoremViolation(const std::string& what) : std::logic_error(what) {}
};

}  // namespace diffalg
