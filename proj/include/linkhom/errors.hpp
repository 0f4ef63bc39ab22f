#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace linkhom {

/// Malformed textual input (word expressions, profile files, table files).
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t position, const std::string& message)
      : std::runtime_error("parse error at position " + std::to_string(position) + ": " + message),
        position_(position),
        message_(message) {}

  std::size_t position() const noexcept { return position_; }
  const std::string& message() const noexcept { return message_; }

 private:
  std::size_t position_;
  std::string message_;
};

/// Line-oriented file input that fails to parse or validate.
class FormatError : public std::runtime_error {
 public:
  FormatError(std::size_t line, const std::string& message)
      : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// An operation was called outside its domain (bad index, non-cycle, ...).
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A splitting profile contradicts a constraint every actual link satisfies.
class UnrealizableProfile : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

}  // namespace linkhom
