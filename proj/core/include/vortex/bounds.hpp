#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "vortex/field.hpp"
#include "vortex/optimizer.hpp"
#include "vortex/params.hpp"

namespace vortex {

/// First positive zero r0 of J_0 (2.404825557695773...).
double first_bessel_zero();

/// Necessary condition for a nontrivial finite-energy solution:
/// kappa < 1/alpha - (n^2 + r0^2) / (2 R^2).
double kappa_upper_bound(const Params& p);

/// Lower bound on the propagation constant of the flux-constrained minimizer,
/// from the tent witness with b^2 = 3 Q0 / (pi R^2).
double kappa_lower_bound(const Params& p, double Q0);

/// R above which I_kappa is indefinite (tent argument).
double radius_indefinite(const Params& p, double kappa);

/// R above which the Nehari manifold is nonempty.
double radius_nehari(const Params& p, double kappa);

struct BoundsReport {
  Params params;
  double Q0 = 0.0;
  double kappa = 0.0;           ///< kappa used for the kappa-dependent fields
  bool kappa_assumed = false;   ///< true when kappa is the midpoint of [lower, upper]
  double r0 = 0.0;
  double kappa_upper = 0.0;
  double kappa_lower = 0.0;
  double sigma = 0.0;           ///< 1/alpha - (n^2 + r0^2) / (2R^2) - kappa
  bool winding_negative = false;   ///< |n| >= Q0 / pi, so kappa < 0
  bool small_flux = false;         ///< Q0 <= 1/4
  bool small_flux_condition = false;  ///< n^2 + 2 r^2 kappa > 0 for all r in [0, R]
  bool small_flux_excluded = false;   ///< both of the above: no nontrivial solution
  double R_indefinite = 0.0;
  double R_nehari = 0.0;
  std::pair<double, double> kappa_interval;
};

/// Throws DomainError for Q0 <= 0.
BoundsReport bounds_report(const Params& p, double Q0, std::optional<double> kappa = std::nullopt);

struct BoundViolation {
  std::string code;
  std::string message;
  bool advisory = false;  ///< informational; does not invalidate the solution
};

/// Named violations of the closed-form estimates by a solved (u, kappa).
std::vector<BoundViolation> check_solution_against_bounds(const SolveResult& res,
                                                          const BoundsReport& rep);

/// True when any violation is not advisory.
bool has_hard_violation(const std::vector<BoundViolation>& violations);

struct DecayFit {
  std::pair<double, double> r_window;
  double slope = 0.0;      ///< least-squares d(ln u^2)/dr
  double C_kappa = 0.0;    ///< exp(intercept)
  double threshold = 0.0;  ///< -0.9 sqrt(2 kappa)
  bool passes = false;     ///< slope <= threshold
};

/// Fits ln u^2 against r on the quadrature nodes of [lo_frac R, hi_frac R].
/// Throws DomainError for kappa <= 0 or a window outside (0.5R, 0.95R).
DecayFit decay_fit(const RadialField& u, double kappa, double lo_frac = 0.6, double hi_frac = 0.9);

}  // namespace vortex
