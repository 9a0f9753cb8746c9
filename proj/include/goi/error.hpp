#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace goi {

// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Carriers (vertex sets) do not satisfy an operation's locativity constraint.
class CarrierError : public Error {
 public:
  using Error::Error;
};

// A simplified graph or matrix carries an infinite weight, or the
// reduction it would require is not total.
class TotalityError : public Error {
 public:
  using Error::Error;
};

// The cut of two projects is undefined because their interaction is infinite.
class CutUndefinedError : public Error {
 public:
  using Error::Error;
};

class DelocationError : public Error {
 public:
  using Error::Error;
};

// Domain and image of a delocation overlap where disjointness is required.
class LocativityError : public Error {
 public:
  using Error::Error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// Iterative method failed to meet its tolerance; carries the last estimate.
class ConvergenceError : public Error {
 public:
  ConvergenceError(const std::string& what, double last_estimate)
      : Error(what), last_estimate_(last_estimate) {}
  double last_estimate() const noexcept { return last_estimate_; }

 private:
  double last_estimate_;
};

// Text input could not be parsed; line and column are 1-based.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t line, std::size_t column)
      : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
        line_(line),
        column_(column) {}
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

// A proof violates a side condition of its sequent rule.
class ProofError : public Error {
 public:
  using Error::Error;
};

}  // namespace goi
