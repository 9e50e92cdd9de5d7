#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace monores {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class DimensionMismatch : public Error {
public:
    DimensionMismatch(std::size_t expected, std::size_t got)
        : Error("dimension mismatch: expected " + std::to_string(expected) + ", got " +
                std::to_string(got)) {}
};

class OverflowError : public Error {
public:
    explicit OverflowError(const std::string& where) : Error("integer overflow in " + where) {}
};

/// Malformed arguments: empty generator lists, zero exponents where the unit
/// ideal is not allowed, duplicate points, r = 0, ...
class InvalidInput : public Error {
public:
    using Error::Error;
};

/// The input is well formed but outside the scope of the operation, e.g. an
/// Artinian-only computation applied to an ideal with positive-dimensional zero set.
class PreconditionError : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t line, std::size_t column)
        : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + what),
          line_(line),
          column_(column) {}

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

}  // namespace monores
