#pragma once

#include <stdexcept>
#include <string>

namespace coxdescent {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Arithmetic failure in a finite field (division by zero, tower mismatch,
/// reducible modulus, ...).
class FieldError : public Error {
public:
    using Error::Error;
};

/// Operands live in different rings, or a ring is malformed.
class RingError : public Error {
public:
    using Error::Error;
};

/// A polynomial that had to be homogeneous is not. Carries two offending
/// monomials rendered with the ring's variable names.
class InhomogeneousError : public Error {
public:
    InhomogeneousError(std::string first, std::string second)
        : Error("inhomogeneous polynomial: monomials " + first + " and " + second +
                " have different multidegrees"),
          first_(std::move(first)), second_(std::move(second)) {}

    const std::string& first() const noexcept { return first_; }
    const std::string& second() const noexcept { return second_; }

private:
    std::string first_;
    std::string second_;
};

/// An ideal-theoretic operation was called outside its domain
/// (unit ideal for dimension, zero direction for saturation, ...).
class IdealError : public Error {
public:
    using Error::Error;
};

/// Text could not be parsed. `line` is 1-based, 0 when unknown.
class ParseError : public Error {
public:
    ParseError(const std::string& what, int line = 0)
        : Error(line > 0 ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}

    int line() const noexcept { return line_; }

private:
    int line_;
};

} // namespace coxdescent
