#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace shiftlab {

/// Base class of every failure raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Argument outside the domain of the represented functions (e.g. |z| > 1).
class DomainError : public Error {
public:
    using Error::Error;
};

/// Boundary grid too coarse for the polynomial being sampled.
class AliasingError : public Error {
public:
    using Error::Error;
};

/// Trigonometric polynomial is negative somewhere on the circle.
class NonFactorableError : public Error {
public:
    using Error::Error;
};

/// Root structure contradicts a nonnegative symbol (odd boundary multiplicity, unpaired roots).
class InconsistentInputError : public Error {
public:
    using Error::Error;
};

/// b is an extreme point of the unit ball: no Pythagorean mate.
class ExtremePointError : public Error {
public:
    using Error::Error;
};

class NotDivisibleError : public Error {
public:
    using Error::Error;
};

class NotInRangeError : public Error {
public:
    NotInRangeError(const std::string& what, double residual)
        : Error(what), residual_(residual) {}
    double residual() const noexcept { return residual_; }

private:
    double residual_;
};

class NonPsdError : public Error {
public:
    NonPsdError(const std::string& what, double min_eigenvalue)
        : Error(what), min_eigenvalue_(min_eigenvalue) {}
    double min_eigenvalue() const noexcept { return min_eigenvalue_; }

private:
    double min_eigenvalue_;
};

class IllConditionedError : public Error {
public:
    using Error::Error;
};

class UnsupportedError : public Error {
public:
    using Error::Error;
};

class PreconditionError : public Error {
public:
    using Error::Error;
};

/// Guard band leaves no trustworthy block to compare.
class InconclusiveError : public Error {
public:
    using Error::Error;
};

/// Truncation doubling did not stabilize; carries the observed values.
class UnconvergedError : public Error {
public:
    UnconvergedError(const std::string& what, std::vector<double> trajectory)
        : Error(what), trajectory_(std::move(trajectory)) {}
    const std::vector<double>& trajectory() const noexcept { return trajectory_; }

private:
    std::vector<double> trajectory_;
};

class ConfigError : public Error {
public:
    using Error::Error;
};

}  // namespace shiftlab
