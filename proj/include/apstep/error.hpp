#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace apstep {

/// Base class for every domain error raised by the library. The CLI maps
/// these to exit code 1.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed input text. `line` is 1-based, 0 when not tied to a line.
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t line = 0, std::string field = {})
        : Error(format(what, line, field)), line_(line), field_(std::move(field)) {}

    std::size_t line() const noexcept { return line_; }
    const std::string& field() const noexcept { return field_; }

private:
    static std::string format(const std::string& what, std::size_t line, const std::string& field) {
        std::string msg;
        if (line > 0) msg += "line " + std::to_string(line) + ": ";
        if (!field.empty()) msg += "field '" + field + "': ";
        return msg + what;
    }

    std::size_t line_;
    std::string field_;
};

/// A structural invariant does not hold (ordering, lengths, finiteness).
class InvariantError : public Error {
public:
    using Error::Error;
};

/// A value lies outside the admissible domain of an operation.
class RangeError : public Error {
public:
    using Error::Error;
};

/// An index argument is outside the valid range.
class IndexError : public Error {
public:
    using Error::Error;
};

}  // namespace apstep
