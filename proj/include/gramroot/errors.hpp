#pragma once

#include <stdexcept>
#include <string>

namespace gramroot {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// File could not be opened, read or written.
class IoError : public Error {
public:
    using Error::Error;
};

/// Input file exists but is not in the expected format.
class FormatError : public Error {
public:
    using Error::Error;
};

/// An invariant on the data itself is violated (dimensions, SPD-ness,
/// mesh manifoldness, parameter ranges).
class ValidationError : public Error {
public:
    using Error::Error;
};

/// A tabulated value was requested for a combination the tables do not cover.
class UnavailableError : public Error {
public:
    using Error::Error;
};

/// An iteration did not reach its tolerance; carries the best estimate.
class ConvergenceError : public Error {
public:
    ConvergenceError(const std::string& what, double best, double residual, int iterations)
        : Error(what), best(best), residual(residual), iterations(iterations) {}

    double best;
    double residual;
    int iterations;
};

} // namespace gramroot
