#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace interlace {

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A caller-supplied argument violates an operation's precondition
/// (unknown vertex, non-adjacent pivot pair, invalid split witness, ...).
class PreconditionError : public Error {
public:
    using Error::Error;
};

/// Malformed textual input. Line and column are 1-based; 0 means unknown.
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t line = 0, std::size_t column = 0)
        : Error(format(what, line, column)), line_(line), column_(column) {}

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    static std::string format(const std::string& what, std::size_t line, std::size_t column) {
        if (line == 0) return what;
        return "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what;
    }

    std::size_t line_;
    std::size_t column_;
};

/// An exponential enumeration was refused because the instance exceeds the
/// configured vertex cap.
class CapExceeded : public Error {
public:
    CapExceeded(const std::string& what, std::size_t size, std::size_t cap)
        : Error(what + " (size " + std::to_string(size) + " exceeds cap " + std::to_string(cap) + ")"),
          size_(size), cap_(cap) {}

    std::size_t size() const noexcept { return size_; }
    std::size_t cap() const noexcept { return cap_; }

private:
    std::size_t size_;
    std::size_t cap_;
};

/// An internal consistency check failed (e.g. a nullity pattern that the
/// underlying linear algebra guarantees).
class InternalError : public Error {
public:
    using Error::Error;
};

}  // namespace interlace
