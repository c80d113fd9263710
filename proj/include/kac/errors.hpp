#pragma once

#include <stdexcept>
#include <string>

namespace kac {

/// Violated precondition or malformed input. The CLI maps it to exit code 2.
class ArgumentError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Malformed quiver spec or serialized value, with position information.
class ParseError : public ArgumentError {
 public:
  ParseError(int line, std::string field, const std::string& what)
      : ArgumentError("line " + std::to_string(line) + ", field '" + field + "': " + what),
        line_(line),
        field_(std::move(field)) {}

  int line() const noexcept { return line_; }
  const std::string& field() const noexcept { return field_; }

 private:
  int line_;
  std::string field_;
};

/// A result that the mathematics guarantees failed to materialize (for example a
/// non-integral Kac polynomial). Always a bug; the CLI maps it to exit code 3.
class InvariantError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace kac
