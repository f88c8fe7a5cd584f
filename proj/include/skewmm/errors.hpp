#pragma once

#include <stdexcept>
#include <string>

namespace skewmm {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Bad argument value: composite p, probability outside (0,1), index out of range.
class DomainError : public Error {
public:
    using Error::Error;
};

/// Operands built for different primes, or matrices of incompatible shape.
class DimensionError : public Error {
public:
    using Error::Error;
};

/// Division by zero in Q or Q(beta).
class DivisionByZero : public Error {
public:
    using Error::Error;
};

/// A linear system that must be nonsingular turned out singular.
class SingularSystem : public Error {
public:
    using Error::Error;
};

/// Sparse interpolation could not reconstruct a polynomial from its values.
class InterpolationError : public Error {
public:
    using Error::Error;
};

/// Internal consistency check failed (for example the orientation probe).
class InternalError : public Error {
public:
    using Error::Error;
};

/// Malformed matrix file contents.
class FormatError : public Error {
public:
    using Error::Error;
};

/// File could not be opened, read, or written.
class IoError : public Error {
public:
    using Error::Error;
};

}  // namespace skewmm
