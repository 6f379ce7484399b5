// errors.hpp: exception types raised by the qbm library

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qbm {

/// Base class of every error thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Argument outside the mathematical domain of a function (e.g. E1(x) for x <= 0).
class DomainError : public Error {
public:
    using Error::Error;
};

/// Adaptive quadrature could not reach the requested tolerance within its budget.
class NonConvergence : public Error {
public:
    NonConvergence(const std::string& what, double value, double abs_error, std::size_t evaluations)
        : Error(what), value_(value), abs_error_(abs_error), evaluations_(evaluations) {}

    double partial_value() const noexcept { return value_; }
    double abs_error_estimate() const noexcept { return abs_error_; }
    std::size_t evaluations() const noexcept { return evaluations_; }

private:
    double value_;
    double abs_error_;
    std::size_t evaluations_;
};

/// A principal-value integrand does not have a simple pole at the declared point.
class SingularityMisdeclared : public Error {
public:
    using Error::Error;
};

/// Tail classification could not tell convergent, logarithmic and power behaviour apart.
class Inconclusive : public Error {
public:
    using Error::Error;
};

/// The spectral model has no well-defined damping kernel.
class InvalidModel : public Error {
public:
    using Error::Error;
};

/// The requested quantity is not available for this model (distributional kernels, divergent J).
class Unsupported : public Error {
public:
    using Error::Error;
};

/// Discrete bath whose frequencies are (numerically) degenerate.
class DegenerateBath : public Error {
public:
    using Error::Error;
};

/// A bath frequency coincides with a normal-mode frequency, so the residue terms at that pair vanish.
class CoincidentPole : public Error {
public:
    using Error::Error;
};

/// Ground-state eigen-decomposition failed.
class EigenFailure : public Error {
public:
    using Error::Error;
};

/// Text input (model description or bath file) could not be parsed.
class ParseError : public Error {
public:
    ParseError(const std::string& message, std::size_t line, std::size_t column)
        : Error(format(message, line, column)), line_(line), column_(column) {}

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    static std::string format(const std::string& message, std::size_t line, std::size_t column) {
        std::string out = "line " + std::to_string(line);
        if (column > 0) out += ", column " + std::to_string(column);
        return out + ": " + message;
    }

    std::size_t line_;
    std::size_t column_;
};

}  // namespace qbm
