#pragma once

#include <stdexcept>

namespace borpi {

// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Input outside an operation's mathematical domain (negative radicand,
// descent argument outside (0,1), division by zero, non-finite result).
struct DomainError : Error {
    using Error::Error;
};

// A series hit its term cap before the truncation rule was satisfied.
struct PrecisionError : Error {
    using Error::Error;
};

// An iteration did not satisfy its stopping rule within the hard cap.
struct ConvergenceError : Error {
    using Error::Error;
};

// A series argument outside the radius of convergence, or terms detected
// to grow without settling.
struct DivergenceError : Error {
    using Error::Error;
};

// Malformed expression text, initial-value file, or digits file.
struct ParseError : Error {
    using Error::Error;
};

}  // namespace borpi
