#pragma once

#include <stdexcept>
#include <string>

namespace wordramsey {

// Malformed user input (files, CLI values). Parsers fill in the line number.
class InputError : public std::runtime_error {
 public:
  explicit InputError(const std::string& what, int line = 0)
      : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
        line_(line) {}
  int line() const noexcept { return line_; }

 private:
  int line_;
};

// An operation was applied outside its declared domain (w not in S_n, etc).
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A configured size bound (word length, generator count, cell count, horizon)
// would be exceeded.
class BoundError : public std::length_error {
 public:
  using std::length_error::length_error;
};

}  // namespace wordramsey
