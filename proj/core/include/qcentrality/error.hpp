#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qcentrality {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A precondition on an argument was violated (bad node id, alpha out of range, ...).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// Malformed graph input. Carries the 1-based line number when known (0 otherwise).
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line);

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// Numerical failure: eigensolver did not converge, exponential overflow, iteration cap hit.
class NumericalError : public Error {
 public:
  using Error::Error;
};

}  // namespace qcentrality
