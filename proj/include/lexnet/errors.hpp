#pragma once

#include <stdexcept>
#include <string>

namespace lexnet {

/// Base class for all recoverable lexnet errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed transcript or network file. Carries the 1-based line number.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, int line)
      : Error("line " + std::to_string(line) + ": " + message), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

/// Invalid configuration (bad ranges, unknown keys, out-of-range knobs).
class ConfigError : public Error {
 public:
  using Error::Error;
};

/// Unreadable or unusable input data (missing files, empty speaker data).
class InputError : public Error {
 public:
  using Error::Error;
};

}  // namespace lexnet
