#pragma once

#include <stdexcept>
#include <string>

namespace semiarith {

/// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

class FieldMismatch : public Error {
 public:
  FieldMismatch() : Error("operands belong to different quadratic fields") {}
  using Error::Error;
};

class DivisionByZero : public Error {
 public:
  DivisionByZero() : Error("division by zero") {}
};

/// Input is not an algebraic integer (symmetric functions not in Z).
class NonIntegral : public Error {
 public:
  using Error::Error;
};

/// Element lies outside the supported tower (degree > 4 or a radicand that
/// cannot be combined).
class UnsupportedTower : public Error {
 public:
  using Error::Error;
};

/// Trace data for which the quaternion-algebra formula degenerates
/// (tr(A)^2 = 4 or tr[A,B] = 2).
class DegenerateTraces : public Error {
 public:
  using Error::Error;
};

/// An internal consistency check failed (numeric or exact).
class VerificationFailure : public Error {
 public:
  using Error::Error;
};

/// Iteration cap exceeded; carries the last gradient norm.
class ConvergenceFailure : public Error {
 public:
  ConvergenceFailure(const std::string& what, double residual) : Error(what), residual_(residual) {}
  double residual() const { return residual_; }

 private:
  double residual_;
};

}  // namespace semiarith
