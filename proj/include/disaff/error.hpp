#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace disaff {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A required input file could not be opened.
class IoError : public Error {
public:
    using Error::Error;
};

/// Input that violates a documented contract (bad value, duplicate key, ...).
class ValidationError : public Error {
public:
    using Error::Error;
};

/// Malformed line in a line-oriented input. `line()` is 1-based.
class ParseError : public ValidationError {
public:
    ParseError(std::size_t line, const std::string& reason)
        : ValidationError("line " + std::to_string(line) + ": " + reason), line_(line), reason_(reason) {}

    std::size_t line() const noexcept { return line_; }
    const std::string& reason() const noexcept { return reason_; }

private:
    std::size_t line_;
    std::string reason_;
};

/// An internal invariant was found broken at run time.
class InvariantError : public Error {
public:
    using Error::Error;
};

}  // namespace disaff
