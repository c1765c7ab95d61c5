#pragma once

#include <stdexcept>
#include <string>

namespace f1curve {

// Caller passed something outside an operation's domain.
class ArgumentError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// q = 1 or q = -1: |q| = 1 at the archimedean place, so no map is defined.
class ExceptionalNumberError : public ArgumentError {
 public:
  explicit ExceptionalNumberError(const std::string& q)
      : ArgumentError("exceptional number " + q +
                      ": archimedean absolute value is 1") {}
};

// The prime divides the denominator, so it is not a prime of Z[q]; use the
// inverse chart.
class ChartError : public ArgumentError {
 public:
  using ArgumentError::ArgumentError;
};

// Input exceeds what the arithmetic backend can certify (2^128 for
// factorization).
class MagnitudeError : public std::range_error {
 public:
  using std::range_error::range_error;
};

// An internal consistency check failed; indicates a bug or a caller that
// bypassed a precondition.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace f1curve
