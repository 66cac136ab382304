#pragma once

#include <span>
#include <string>
#include <vector>

#include "vortex/field.hpp"
#include "vortex/params.hpp"
#include "vortex/quadrature.hpp"

namespace vortex {

/// Solution of the n-vortex ODE as an initial-value problem at fixed kappa,
/// sampled on the uniform grid r_i = i R / steps.
struct ShootProfile {
  Params params;
  double kappa = 0.0;
  double core_slope = 0.0;  ///< c in u ~ c r^|n| near the core
  std::vector<double> r;
  std::vector<double> u;
  std::vector<double> du;
  bool multiple_brackets = false;  ///< more than one amplitude bracket was seen

  double terminal() const { return u.empty() ? 0.0 : u.back(); }
  double max_amplitude() const;
  /// u changes sign strictly inside (0, R).
  bool has_interior_node() const;
  /// 2 pi \int r u^2 dr by composite Simpson.
  double flux() const;
  /// Cubic-Hermite interpolation of (u, u_r) onto the mesh quadrature nodes.
  RadialField resample(MeshPtr mesh) const;
};

inline constexpr int kMinShootSteps = 4096;
inline constexpr int kDefaultShootSteps = 8192;

/// Classical RK4 from r = 1e-6 R with u = c r^|n|, u_r = |n| c r^(|n|-1).
/// The first grid cell is crossed with geometrically growing sub-steps so the
/// 1/r coefficients stay resolved. Throws Overflow if the shot diverges and
/// DomainError for c < 0 or steps < 4096.
ShootProfile shoot(double kappa, double c, const Params& p, int steps = kDefaultShootSteps);

struct ShootingOptions {
  int steps = kDefaultShootSteps;
  double c_min = 1e-8;
  double c_max = 1e3;
  int scan_per_decade = 8;
  double terminal_tol = 1e-9;  ///< |u(R)| <= terminal_tol * max u
};

/// Nodeless profile with u(R) = 0 at this kappa: log-scan of c for the first
/// transition from "stays positive" to "crosses zero", then bisection.
/// Throws NoBracket when the scan finds no transition.
ShootProfile profile_for_kappa(double kappa, const Params& p, const ShootingOptions& options = {});

struct FluxCurvePoint {
  double kappa = 0.0;
  double flux = 0.0;
  double max_amplitude = 0.0;
  bool ok = false;
  std::string error;
};

/// Q(kappa) over a grid; points without a bracket are flagged, not fatal.
std::vector<FluxCurvePoint> flux_of_kappa(std::span<const double> kappas, const Params& p,
                                          const ShootingOptions& options = {});

}  // namespace vortex
