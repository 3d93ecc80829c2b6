#pragma once

#include <stdexcept>
#include <string>

namespace qpade {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A problem parameter tuple violates its admissibility constraint.
class ConstraintError : public Error {
 public:
  using Error::Error;
};

/// Evaluation hit a pole of a rational function.
class PoleError : public Error {
 public:
  using Error::Error;
};

/// Instance exceeds the configured A(n+1) capacity cap.
class CapacityError : public Error {
 public:
  using Error::Error;
};

/// Arithmetic precondition failure (zero divisor, inexact division, ...).
class ArithmeticError : public Error {
 public:
  using Error::Error;
};

}  // namespace qpade
