#pragma once

#include <stdexcept>
#include <string>

namespace dynatomic {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An exact division left a nonzero remainder (or a non-divisible leading
/// coefficient). Every place that raises this relies on a divisibility
/// identity, so seeing it means an identity failed or the inputs are wrong.
class DivisionNotExact : public Error {
 public:
  using Error::Error;
};

class NotPerfectPower : public Error {
 public:
  using Error::Error;
};

class ZeroPolynomial : public Error {
 public:
  using Error::Error;
};

/// Evaluation/interpolation was run with a c-degree bound below the true
/// degree; caught by re-checking at nodes past the interpolation range.
class BoundTooSmall : public Error {
 public:
  using Error::Error;
};

/// A polynomial is not in the subring Z[t, x] for the family's rescale
/// variable t (wrong c-exponent stride or missing power of d).
class NotInSubring : public Error {
 public:
  using Error::Error;
};

/// Requested period or degree exceeds the configured guardrail.
class GuardrailViolation : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace dynatomic
