#pragma once

#include <stdexcept>
#include <string>

namespace gpretzel {

/// Input that violates a documented precondition or data invariant.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Text that could not be parsed; carries a 1-based line/column.
class ParseError : public InputError {
 public:
  ParseError(const std::string& what, int line, int column)
      : InputError(what + " at line " + std::to_string(line) + ", column " +
                   std::to_string(column)),
        line_(line),
        column_(column) {}

  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }

 private:
  int line_;
  int column_;
};

/// A computation reached a state its own invariants rule out.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace gpretzel
