#pragma once

#include <stdexcept>
#include <string>

namespace mlgp {

// Base for all library errors so callers can catch one type at the boundary.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

class ZeroNormRow : public Error {
public:
    explicit ZeroNormRow(int row)
        : Error("row " + std::to_string(row) + " has zero Euclidean norm"), row(row) {}
    int row;
};

class NonFinite : public Error {
public:
    NonFinite(int row, int col)
        : Error("non-finite entry at (" + std::to_string(row) + ", " + std::to_string(col) + ")"),
          row(row), col(col) {}
    int row, col;
};

class BadK : public Error {
public:
    explicit BadK(int k) : Error("fold count must be >= 2, got " + std::to_string(k)) {}
};

class RowMismatch : public Error {
public:
    explicit RowMismatch(const std::string& what) : Error(what) {}
};

class UnknownLabel : public Error {
public:
    explicit UnknownLabel(const std::string& label) : Error("unknown class label '" + label + "'") {}
};

class ParseError : public Error {
public:
    ParseError(const std::string& file, int line, const std::string& what)
        : Error(file + ":" + std::to_string(line) + ": " + what), line(line) {}
    int line;
};

class FactorizationFailure : public Error {
public:
    explicit FactorizationFailure(const std::string& what) : Error(what) {}
};

class EmptyTrace : public Error {
public:
    EmptyTrace() : Error("trace contains no samples") {}
};

class EmptySet : public Error {
public:
    explicit EmptySet(const std::string& what) : Error(what) {}
};

class ConfigError : public Error {
public:
    explicit ConfigError(const std::string& what) : Error(what) {}
};

class IoError : public Error {
public:
    explicit IoError(const std::string& what) : Error(what) {}
};

} // namespace mlgp
