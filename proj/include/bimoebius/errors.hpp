#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace bimo {

// Base class for all library-domain failures.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A core constructor was given (or produced) a NaN/infinite coordinate.
struct NonFiniteValue : Error {
    using Error::Error;
};

// invert() was asked for the ring inverse of a null-cone element.
struct SingularOperand : Error {
    using Error::Error;
};

// Transform construction with ad - bc in the null cone.
struct DegenerateDeterminant : Error {
    using Error::Error;
};

// Generator decomposition requested while c has exactly one zero component.
struct CNotInvertible : Error {
    using Error::Error;
};

// Cartesian formatting requested for a value with an infinite component.
struct CartesianInfinity : Error {
    using Error::Error;
};

// Literal syntax error. `offset` is the byte position of the first
// offending character, `expected` describes the acceptable tokens there.
struct ParseError : Error {
    ParseError(std::size_t offset, std::string expected)
        : Error("parse error at byte " + std::to_string(offset) + ": expected " + expected),
          offset(offset),
          expected(std::move(expected)) {}

    std::size_t offset;
    std::string expected;
};

// A numeric token that does not fit in a double.
struct OverflowError : Error {
    explicit OverflowError(std::size_t offset)
        : Error("number at byte " + std::to_string(offset) + " is not representable"),
          offset(offset) {}

    std::size_t offset;
};

// A transform spec with the wrong JSON shape (missing/mistyped members,
// or a coefficient literal that is not finite).
struct SpecError : Error {
    using Error::Error;
};

}  // namespace bimo
