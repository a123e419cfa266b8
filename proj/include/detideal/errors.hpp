#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace detideal {

// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Operands belong to different rings (variables or field differ).
struct RingMismatchError : Error {
    using Error::Error;
};

// A monomial order was applied to data of the wrong shape.
struct OrderMismatchError : Error {
    using Error::Error;
};

// Leading term of the zero polynomial was requested.
struct ZeroPolynomialError : Error {
    using Error::Error;
};

// Invalid argument values (non-square matrix, t out of range, bad shapes, ...).
struct DomainError : Error {
    using Error::Error;
};

// Ring exceeds the fixed monomial capacity, or an exponent overflows.
struct CapacityError : Error {
    using Error::Error;
};

// Text input could not be parsed; `position` is a 0-based byte offset.
struct ParseError : Error {
    std::size_t position;
    ParseError(const std::string& what, std::size_t pos)
        : Error(what + " (at offset " + std::to_string(pos) + ")"), position(pos) {}
};

// A configured pair/step budget was exceeded.  Never produces a wrong result:
// callers see this instead of a truncated basis.
struct ResourceExhaustedError : Error {
    using Error::Error;
};

// The substitution recursion hit an entry that is not a bare variable.
struct SubstitutionError : Error {
    using Error::Error;
};

}  // namespace detideal
