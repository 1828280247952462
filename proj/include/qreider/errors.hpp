#pragma once

#include <stdexcept>
#include <string>

namespace qreider {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Two classes (or a class and a cone) that live in different lattices.
class LatticeMismatchError : public Error {
 public:
  using Error::Error;
};

class UnknownNameError : public Error {
 public:
  using Error::Error;
};

// A documented precondition of an operation does not hold.
class DomainError : public Error {
 public:
  using Error::Error;
};

// A structural invariant of a value (symmetric gram, mult bounds, ...) is broken.
class InvariantError : public Error {
 public:
  using Error::Error;
};

class NotNefError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(int line, int column, const std::string& message)
      : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
        line_(line),
        column_(column),
        message_(message) {}

  int line() const { return line_; }
  int column() const { return column_; }
  const std::string& message() const { return message_; }

 private:
  int line_;
  int column_;
  std::string message_;
};

}  // namespace qreider
