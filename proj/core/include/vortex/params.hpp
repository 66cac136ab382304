#pragma once

#include <cstdlib>

#include "vortex/errors.hpp"

namespace vortex {

/// Physical parameters of the n-vortex equation
///   (r u_r)_r - n^2 u / r + 2 r u^3 / (1 + alpha u^2) - 2 kappa r u = 0,
///   u(0) = u(R) = 0.
struct Params {
  double alpha = 0.1;  ///< saturation constant, > 0
  int n = 1;           ///< vortex winding number, |n| >= 1
  double R = 8.0;      ///< distance from the vortex core, > 0

  Params() = default;
  Params(double alpha_, int n_, double R_) : alpha(alpha_), n(n_), R(R_) { validate(); }

  void validate() const {
    if (!(alpha > 0.0)) throw DomainError("Params: alpha must be positive");
    if (std::abs(n) < 1) throw DomainError("Params: |n| must be at least 1");
    if (!(R > 0.0)) throw DomainError("Params: R must be positive");
  }

  double n_squared() const { return static_cast<double>(n) * static_cast<double>(n); }
  double inv_alpha() const { return 1.0 / alpha; }
};

}  // namespace vortex
