#pragma once

#include <stdexcept>
#include <string>

namespace rbf {

// Syntax error with a 0-based byte offset into the source text.
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t position, const std::string& message)
        : std::runtime_error("syntax error at position " + std::to_string(position) + ": " + message),
          position_(position) {}

    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

// Semantic error raised while evaluating a parsed expression
// (decoration-length mismatches, mixing incompatible term kinds).
class EvalError : public std::runtime_error {
public:
    explicit EvalError(const std::string& message) : std::runtime_error(message) {}
};

// A symbol is not part of the alphabet in use, or an assignment is missing it.
class AlphabetError : public std::runtime_error {
public:
    explicit AlphabetError(const std::string& message) : std::runtime_error(message) {}
};

// An element lies outside the required basis support (e.g. not ladder-free).
class SupportError : public std::runtime_error {
public:
    explicit SupportError(const std::string& message) : std::runtime_error(message) {}
};

// A sampled precondition on a target algebra does not hold.
class PreconditionError : public std::runtime_error {
public:
    explicit PreconditionError(const std::string& message) : std::runtime_error(message) {}
};

} // namespace rbf
