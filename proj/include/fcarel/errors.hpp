#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace fcarel {

enum class ErrorKind {
    Parse,         // malformed context file
    Range,         // index out of bounds
    Degenerate,    // undefined quantity: zero extent mass, zero base entropy
    Size,          // n out of range or combinatorial guard exceeded
    Capacity,      // concept capacity exceeded during enumeration
    NotClarified,  // strict mode on an unclarified context
};

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t line)
        : Error(ErrorKind::Parse, line ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}
    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

class RangeError : public Error {
public:
    explicit RangeError(const std::string& what) : Error(ErrorKind::Range, what) {}
};

class DegenerateError : public Error {
public:
    explicit DegenerateError(const std::string& what) : Error(ErrorKind::Degenerate, what) {}
};

class SizeError : public Error {
public:
    explicit SizeError(const std::string& what) : Error(ErrorKind::Size, what) {}
};

class CapacityError : public Error {
public:
    CapacityError(std::size_t capacity, std::size_t produced)
        : Error(ErrorKind::Capacity, "concept capacity " + std::to_string(capacity) + " exceeded after " +
                                         std::to_string(produced) + " concepts"),
          produced_(produced) {}
    /// Concepts emitted before the guard tripped.
    std::size_t produced() const noexcept { return produced_; }

private:
    std::size_t produced_;
};

class NotClarifiedError : public Error {
public:
    explicit NotClarifiedError(const std::string& what) : Error(ErrorKind::NotClarified, what) {}
};

}  // namespace fcarel
