#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace lexalign {

// Base class for all toolkit errors. The CLI maps subclasses to exit codes.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Bad command line usage (exit code 1).
class UsageError : public Error {
 public:
  using Error::Error;
};

// Invalid or inconsistent input data (exit code 2).
class DataError : public Error {
 public:
  using Error::Error;
};

// Parse failure in an input file, with the 1-based line number.
class ParseError : public DataError {
 public:
  ParseError(const std::string& path, std::size_t line, const std::string& message)
      : DataError(path + ":" + std::to_string(line) + ": " + message), line_(line) {}

  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// Language tags do not match the expected language pair.
class LanguageMismatchError : public DataError {
 public:
  using DataError::DataError;
};

// A pair set of the wrong tier or scope was supplied.
class KindMismatchError : public DataError {
 public:
  using DataError::DataError;
};

}  // namespace lexalign
