#pragma once

#include <stdexcept>
#include <string>

namespace qshuffle {

/// Base class for every error raised by the library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Exact division left a nonzero remainder.
struct NotDivisible : Error {
    using Error::Error;
};

/// A Laurent polynomial with negative exponents was evaluated at zero.
struct ZeroDenominator : Error {
    using Error::Error;
};

/// Two operands live in different symmetric groups / Hecke algebras.
struct SizeMismatch : Error {
    using Error::Error;
};

struct OutOfRange : Error {
    using Error::Error;
};

struct BadSubset : Error {
    using Error::Error;
};

struct NotAStrip : Error {
    using Error::Error;
};

/// The evaluation point makes the Hecke algebra non-semisimple.
struct DegenerateQ : Error {
    using Error::Error;
};

struct CapExceeded : Error {
    using Error::Error;
};

struct SymbolicUnsupported : Error {
    using Error::Error;
};

struct CheckFailed : Error {
    using Error::Error;
};

struct ParseError : Error {
    using Error::Error;
};

}  // namespace qshuffle
