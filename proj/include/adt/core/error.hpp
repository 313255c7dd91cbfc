#pragma once

#include <stdexcept>
#include <string>

namespace adt {

/// Raised for problems in user input: ill-sorted terms, duplicate
/// declarations, uninhabited datatypes.
class UserError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A user error carrying a 1-based source position.
class ParseError : public UserError {
 public:
  ParseError(const std::string& message, int line, int column)
      : UserError(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
        line_(line),
        column_(column) {}

  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

}  // namespace adt
