#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace subtyper {

/// Base class for every failure the library reports.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class UnknownVertexError : public Error {
public:
    explicit UnknownVertexError(const std::string& label)
        : Error("unknown vertex: " + label) {}
};

class CyclicGraphError : public Error {
public:
    using Error::Error;
};

class BudgetExceededError : public Error {
public:
    using Error::Error;
};

class InvalidIntervalError : public Error {
public:
    using Error::Error;
};

class NameCollisionError : public Error {
public:
    using Error::Error;
};

class IoError : public Error {
public:
    using Error::Error;
};

/// Parse failure carrying a 1-based source position. Single-line inputs
/// (type expressions, interval arguments) report line 1 and the offset
/// as the column.
class ParseError : public Error {
public:
    ParseError(const std::string& message, std::size_t line, std::size_t column)
        : Error(message + " at " + std::to_string(line) + ":" + std::to_string(column)),
          line_(line),
          column_(column) {}

    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

class DuplicateClassError : public ParseError {
public:
    using ParseError::ParseError;
};

class UnknownSuperclassError : public ParseError {
public:
    using ParseError::ParseError;
};

/// Raised for superclass instantiations outside the supported
/// `class C<T> extends D<T>` form (nested arguments, raw generic
/// supertypes, arity mismatches).
class UnsupportedInstantiationError : public ParseError {
public:
    using ParseError::ParseError;
};

}  // namespace subtyper
