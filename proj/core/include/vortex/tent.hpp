#pragma once

#include "vortex/field.hpp"
#include "vortex/params.hpp"
#include "vortex/quadrature.hpp"

namespace vortex {

/// Piecewise-linear witness u0(r) = (b/a) r on [0, a], (b/a)(2a - r) on
/// [a, 2a], with a = R/2.
struct TentProfile {
  double a_half = 0.0;
  double b = 0.0;

  static TentProfile for_params(const Params& p, double b) { return {0.5 * p.R, b}; }
  /// Peak amplitude giving flux Q0: b^2 = 3 Q0 / (pi R^2).
  static TentProfile with_flux(const Params& p, double Q0);

  double value(double r) const;
  double derivative(double r) const;
};

/// Closed-form partial integrals of the tent over [0, 2a].
struct TentIntegrals {
  double flux_moment = 0.0;  ///< \int r u0^2      = 2 a^2 b^2 / 3
  double kinetic = 0.0;      ///< \int r u0_r^2    = 2 b^2
  double centrifugal = 0.0;  ///< \int u0^2 / r    = 2 b^2 (2 ln 2 - 1)
  double log_term = 0.0;     ///< \int r ln(1 + alpha u0^2)
};

/// Throws DomainError unless a_half == R/2.
TentIntegrals tent_integrals(const TentProfile& t, const Params& p);

/// I_kappa(u0) in closed form (kappa = 0 gives I(u0)).
double tent_action(const TentProfile& t, const Params& p, double kappa = 0.0);

/// Gamma(inf, u0) = b^2 (1 + n^2 (2 ln 2 - 1) - (1/alpha - kappa) R^2 / 6).
double tent_gamma_infinity(const TentProfile& t, const Params& p, double kappa);

/// The tent sampled on a mesh (exact kink when a is a cell boundary).
RadialField sample_tent(const TentProfile& t, MeshPtr mesh);

/// ln(1 + x) - 2 + 2 atan(sqrt x) / sqrt x, evaluated without cancellation
/// for small x >= 0. Behaves like x/3 - x^2/10 near zero.
double tent_log_bracket(double x);

/// tent_log_bracket(x) - x/3.
double tent_log_bracket_remainder(double x);

}  // namespace vortex
