#pragma once

#include <stdexcept>
#include <string>

namespace sepline {

/// Base class for all errors raised by this library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed input document (bad JSON, bad rational literal, ...).
class ParseError : public Error {
public:
    ParseError(const std::string& what, int line = -1, int column = -1)
        : Error(format(what, line, column)), line_(line), column_(column) {}

    int line() const { return line_; }
    int column() const { return column_; }

private:
    static std::string format(const std::string& what, int line, int column) {
        if (line < 0) return what;
        return what + " (line " + std::to_string(line) + ", column " +
               std::to_string(column) + ")";
    }
    int line_;
    int column_;
};

/// Structurally valid input that violates a precondition (overlapping
/// interiors, degenerate polygon, n out of range, ...).
class ValidationError : public Error {
public:
    using Error::Error;
};

/// The instance generator could not place polygons within its retry budget.
class GenerationError : public Error {
public:
    using Error::Error;
};

/// A pair of cover polygons has no separating side line among the support
/// lines.  Never observed on valid inputs; kept as an escape hatch.
class PairUncoveredError : public Error {
public:
    PairUncoveredError(int i, int j)
        : Error("no support line separates cover polygons " +
                std::to_string(i) + " and " + std::to_string(j)),
          i_(i), j_(j) {}

    int first() const { return i_; }
    int second() const { return j_; }

private:
    int i_;
    int j_;
};

/// Certificate does not belong to the instance it is checked against.
class HashMismatchError : public Error {
public:
    using Error::Error;
};

}  // namespace sepline
