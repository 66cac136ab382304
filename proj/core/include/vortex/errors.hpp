#pragma once

#include <stdexcept>
#include <string>

namespace vortex {

/// Base class of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An argument lies outside the domain of the operation (Q0 <= 0, kappa <= 0
/// for decay fits, malformed tent half-width, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Inconsistent discretization or run configuration.
class ConfigError : public Error {
 public:
  using Error::Error;
};

/// Coefficient vector length does not match the basis size.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// A factorization or iteration broke down (e.g. Gram matrix not SPD).
class NumericalError : public Error {
 public:
  using Error::Error;
};

/// Second derivatives were requested from a basis that does not provide them.
class UnsupportedBasis : public Error {
 public:
  using Error::Error;
};

/// Propagation constant outside the interval on which the fixed-kappa
/// problem has solutions.
class IntervalError : public Error {
 public:
  using Error::Error;
};

/// Gamma(t, u) has no sign change in t, so u cannot be scaled onto the
/// Nehari manifold.
class NoSignChange : public Error {
 public:
  NoSignChange(const std::string& what, double gamma_zero, double gamma_infinity)
      : Error(what), gamma_zero_(gamma_zero), gamma_infinity_(gamma_infinity) {}

  double gamma_zero() const noexcept { return gamma_zero_; }
  double gamma_infinity() const noexcept { return gamma_infinity_; }

 private:
  double gamma_zero_;
  double gamma_infinity_;
};

/// Shooting scan found no amplitude bracket that lands on u(R) = 0.
class NoBracket : public Error {
 public:
  using Error::Error;
};

/// An ODE shot left the representable range.
class Overflow : public Error {
 public:
  using Error::Error;
};

}  // namespace vortex
