#pragma once

#include <stdexcept>
#include <string>

namespace skein {

/// Base class for all errors raised by the library.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Mixing polynomials carried in different formal variables.
struct VarMismatchError : Error {
    using Error::Error;
};

/// Asking for the span (or extreme exponents) of the zero polynomial.
struct ZeroPolynomialError : Error {
    using Error::Error;
};

/// A monomial substitution hit an exponent that is not divisible as required.
struct ExponentError : Error {
    using Error::Error;
};

/// Malformed textual input; carries the offending position.
struct ParseError : Error {
    size_t position;
    ParseError(const std::string& what, size_t pos)
        : Error(what + " (at position " + std::to_string(pos) + ")"), position(pos) {}
};

/// A PD code that violates the structural rules (arc labels not used exactly twice, ...).
struct PDStructureError : Error {
    using Error::Error;
};

/// The brute-force state sum was asked to expand more crossings than allowed.
struct CrossingBoundError : Error {
    int bound;
    CrossingBoundError(int crossings, int bound_)
        : Error("state sum refused: " + std::to_string(crossings) +
                " crossings exceeds the configured bound of " + std::to_string(bound_)),
          bound(bound_) {}
};

/// Graph-side usage errors (unknown vertex, disconnected input, size bounds).
struct GraphError : Error {
    using Error::Error;
};

/// An identity guaranteed by the underlying theory failed; indicates an engine bug
/// (or a structurally valid but non-planar PD input).
struct InternalInconsistencyError : Error {
    using Error::Error;
};

}  // namespace skein
