// error.hpp -- exception types shared across the library
#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace stylus {

// Raised when text input (presentation files, word syntax) is malformed.
// `line` is 1-based; 0 means "no line information".
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, std::string const& message)
      : std::runtime_error(line == 0 ? message
                                     : "line " + std::to_string(line) + ": " + message),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

// Raised when a word over {a,b} is not in the image of the rank code.
class DecodeError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Raised when a word cannot be factored over the code {a b^i : i >= 0}.
class FactorizationError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Raised when a relation cannot be oriented because both sides are equal.
class OrientError : public std::runtime_error {
 public:
  OrientError(std::string const& message, std::vector<std::size_t> offending)
      : std::runtime_error(message), offending_(std::move(offending)) {}

  std::vector<std::size_t> const& offending_relations() const noexcept {
    return offending_;
  }

 private:
  std::vector<std::size_t> offending_;
};

// Raised by the certificate compiler on unusable inputs.
class CompileError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Raised when an operation needs a record word built in compiler-sufficient
// mode but the bundle carries a paper-example record.
class UnsupportedRecordModeError : public CompileError {
  using CompileError::CompileError;
};

}  // namespace stylus
