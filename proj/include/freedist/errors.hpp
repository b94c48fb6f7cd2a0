#pragma once

#include <stdexcept>
#include <string>

namespace freedist {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ParseError : public Error {
public:
    ParseError(const std::string& message, int line, int column)
        : Error(message + " at line " + std::to_string(line) + ", column " + std::to_string(column)),
          line_(line), column_(column) {}
    int line() const { return line_; }
    int column() const { return column_; }

private:
    int line_;
    int column_;
};

class DivisionByZero : public Error {
public:
    DivisionByZero() : Error("division by zero") {}
};

class ChartMismatch : public Error {
public:
    using Error::Error;
};

class MissingCoordinate : public Error {
public:
    using Error::Error;
};

// Frame matrix singular at the base point or identically.
class DegenerateFrame : public Error {
public:
    using Error::Error;
};

// Frame matrix invertible at the base point but determinant not a constant.
class UnsupportedFrame : public Error {
public:
    using Error::Error;
};

class NotFreeDistribution : public Error {
public:
    using Error::Error;
};

class Unsupported : public Error {
public:
    using Error::Error;
};

// An internal identity failed; carries the offending entry.
class InvariantViolation : public Error {
public:
    using Error::Error;
};

}  // namespace freedist
