#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace monoclosure {

/// Operands live in different polynomial rings.
class DimensionMismatch : public std::invalid_argument {
 public:
  DimensionMismatch(std::size_t expected, std::size_t actual)
      : std::invalid_argument("dimension mismatch: expected " + std::to_string(expected) +
                              ", got " + std::to_string(actual)),
        expected_(expected),
        actual_(actual) {}

  std::size_t expected() const noexcept { return expected_; }
  std::size_t actual() const noexcept { return actual_; }

 private:
  std::size_t expected_;
  std::size_t actual_;
};

/// An operation was called outside its documented domain.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Malformed ideal expression. `position` is a 0-based byte offset into the input.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t position, const std::string& message)
      : std::runtime_error("parse error at " + std::to_string(position) + ": " + message),
        position_(position),
        detail_(message) {}

  std::size_t position() const noexcept { return position_; }
  const std::string& detail() const noexcept { return detail_; }

 private:
  std::size_t position_;
  std::string detail_;
};

}  // namespace monoclosure
