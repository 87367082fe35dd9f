#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace setshare {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input text. Line and column are 1-based; 0 means "unknown".
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t line, std::size_t column)
      : Error(format(message, line, column)), line_(line), column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  static std::string format(const std::string& message, std::size_t line, std::size_t column) {
    if (line == 0) return message;
    return std::to_string(line) + ":" + std::to_string(column) + ": " + message;
  }

  std::size_t line_;
  std::size_t column_;
};

/// Well-formed input that violates a semantic rule, e.g. an undeclared variable.
class SemanticError : public Error {
 public:
  using Error::Error;
};

/// An operation was called outside its domain (variables escaping X, mismatched universes).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// A boolean formula whose model set does not contain X.
class NotPositiveError : public SemanticError {
 public:
  using SemanticError::SemanticError;
};

/// A size guard refused to run an exponential computation.
class LimitError : public Error {
 public:
  using Error::Error;
};

}  // namespace setshare
