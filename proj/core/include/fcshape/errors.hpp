#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace fcs {

// Base class for every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A series is too short or otherwise unusable.
class InvalidSeriesError : public Error {
 public:
  using Error::Error;
};

// Operands whose shapes do not agree (length or count mismatch).
class DimensionError : public Error {
 public:
  using Error::Error;
};

// An argument is outside its valid range (e.g. fuzzifier m <= 1).
class ParameterError : public Error {
 public:
  using Error::Error;
};

// A weight vector sums to zero, so a weighted mean is undefined.
class DegenerateWeightsError : public Error {
 public:
  using Error::Error;
};

// A clustering configuration that cannot be run (e.g. c >= n).
class ConfigError : public Error {
 public:
  using Error::Error;
};

// Prototype update requested for a cluster with no members.
class EmptyClusterError : public Error {
 public:
  using Error::Error;
};

// Malformed input file; carries the file name and 1-based line number.
class ParseError : public Error {
 public:
  ParseError(std::string file, std::size_t line, const std::string& message)
      : Error(file + ":" + std::to_string(line) + ": " + message),
        file_(std::move(file)),
        line_(line) {}

  const std::string& file() const noexcept { return file_; }
  std::size_t line() const noexcept { return line_; }

 private:
  std::string file_;
  std::size_t line_;
};

}  // namespace fcs
