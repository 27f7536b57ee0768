#pragma once

#include <stdexcept>
#include <string>

namespace lininv {

/// Base class of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed textual input (scalar or vector grammar, bad flag values).
class ParseError : public Error {
 public:
  using Error::Error;
};

/// An operation was called outside its domain: wrong length, index out of
/// range, an order condition that does not hold, a degenerate vector.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// Two computation routes that must agree did not, or an exactness
/// assertion failed. Always indicates a bug.
class InternalError : public Error {
 public:
  using Error::Error;
};

/// Numerical quadrature did not converge within its budget.
class NumericalError : public Error {
 public:
  using Error::Error;
};

}  // namespace lininv
