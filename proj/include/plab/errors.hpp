#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace plab {

/// Base class of every error raised by the toolkit.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A variable or form lives on a chart that does not match the operand's.
class ChartMismatch : public Error {
public:
    using Error::Error;
};

/// A point assignment does not cover every coordinate of the chart.
class IncompletePoint : public Error {
public:
    using Error::Error;
};

class OrderMismatch : public Error {
public:
    using Error::Error;
};

/// A supplied point does not satisfy the equations it is meant to lie on.
class NotOnLocus : public Error {
public:
    using Error::Error;
};

/// Equations (or their prolongations) span a nonzero constant.
class EmptyLocus : public Error {
public:
    using Error::Error;
};

/// The operation needs an explicit (solved) system and none is available.
class UnsupportedForm : public Error {
public:
    using Error::Error;
};

class InverseCheckFailed : public Error {
public:
    using Error::Error;
};

/// Generators become dependent, or a denominator vanishes, at a point.
class SingularPoint : public Error {
public:
    using Error::Error;
};

class UsageError : public Error {
public:
    using Error::Error;
};

/// An internal mathematical identity (d^2 = 0, groupoid laws, ...) failed.
class InvariantViolation : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    ParseError(const std::string& message, std::size_t line, std::size_t column)
        : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
          line_(line),
          column_(column)
    {
    }

    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

} // namespace plab
