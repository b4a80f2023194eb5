#pragma once

#include <stdexcept>
#include <string>

namespace cocseg {

/// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Invalid argument supplied by the caller (out-of-range index, bad k, ...).
class InputError : public Error {
 public:
  using Error::Error;
};

/// A documented precondition of an operation does not hold.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// Malformed input file (CXT, JSON, config, ...).
class FormatError : public Error {
 public:
  using Error::Error;
};

/// Malformed annotated-corpus line; carries the 1-based line number.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, int line)
      : Error("line " + std::to_string(line) + ": " + message), line_(line) {}

  int line() const { return line_; }

 private:
  int line_;
};

}  // namespace cocseg
