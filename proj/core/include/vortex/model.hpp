#pragma once

#include <Eigen/Core>

#include "vortex/basis.hpp"
#include "vortex/field.hpp"
#include "vortex/params.hpp"

namespace vortex {

/// Partial integrals over [0, R] shared by every functional.
struct FunctionalBreakdown {
  double kinetic = 0.0;      ///< \int r u_r^2
  double centrifugal = 0.0;  ///< \int n^2 u^2 / r
  double flux_moment = 0.0;  ///< \int r u^2  (= Q / 2 pi)
  double log_term = 0.0;     ///< \int r ln(1 + alpha u^2)
  double saturable = 0.0;    ///< \int r u^2 / (1 + alpha u^2)
};

struct FunctionalValue {
  double value = 0.0;
  FunctionalBreakdown breakdown;
};

/// One quadrature pass over the field.
FunctionalBreakdown integrate_terms(const RadialField& u, const Params& p);

/// Q(u) = 2 pi \int r u^2 dr.
double energy_flux(const RadialField& u);

/// I(u) = 1/2 \int { r u_r^2 + n^2 u^2 / r - 2 r u^2 / alpha + 2 r ln(1 + alpha u^2) / alpha^2 }.
///
/// The flux and logarithmic terms nearly cancel for small amplitudes, so the
/// value is accumulated from the combined integrand ln(1+x) - x rather than
/// from the breakdown entries.
FunctionalValue action_I(const RadialField& u, const Params& p);

/// I_kappa(u) = I(u) + kappa \int r u^2 dr.
FunctionalValue action_I_kappa(const RadialField& u, const Params& p, double kappa);

/// I(u) with the logarithmic term integrated by parts:
///   alpha^-2 \int r ln(1 + alpha u^2) = -alpha^-1 \int r^2 u u_r / (1 + alpha u^2),
/// valid because u(0) = u(R) = 0.
double action_I_by_parts(const RadialField& u, const Params& p);

/// E(u) = 1/2 \int { r u_r^2 + u^2 / r + r ln(1 + alpha u^2) }.
double energy_E(const RadialField& u, const Params& p);

/// gamma_kappa(u) = 1/2 <I_kappa'(u), u>. Zero on the Nehari manifold.
double gamma_kappa(const RadialField& u, const Params& p, double kappa);

/// Gamma(t, u), with gamma_kappa(t u) = t^2 Gamma(t, u). Non-increasing in t.
double gamma_big(double t, const RadialField& u, const Params& p, double kappa);

/// lim_{t -> inf} Gamma(t, u): the saturable term dropped.
double gamma_infinity(const RadialField& u, const Params& p, double kappa);

/// kappa = -(pi / Q0) \int { r u_r^2 + n^2 u^2 / r - 2 r u^4 / (1 + alpha u^2) }.
/// Throws DomainError if Q0 <= 0; warns on stderr if Q(u) is far from Q0.
double kappa_from_field(const RadialField& u, const Params& p, double Q0);

/// \int ((r u_r)_r - n^2 u / r + 2 r u^3 / (1 + alpha u^2) - 2 kappa r u)^2 dr.
/// Throws UnsupportedBasis if the field has no second derivative.
double strong_residual(const RadialField& u, const Params& p, double kappa);

/// Same, after projecting u onto `smoothing` (a smooth basis) when u itself
/// has no second derivative.
double strong_residual(const RadialField& u, const Params& p, double kappa,
                       const BasisPtr& smoothing);

/// Both sides of the integrated identity obtained by multiplying the
/// n-vortex equation by u and integrating by parts:
///   -\int r u_r^2 = \int { n^2 u^2 / r + 2 kappa r u^2 - 2 r u^4 / (1 + alpha u^2) }.
struct FluxIdentity {
  double lhs = 0.0;
  double rhs = 0.0;
  double relative_defect() const;
};
FluxIdentity flux_identity(const RadialField& u, const Params& p, double kappa);

namespace detail {
/// ln(1 + x) - x without cancellation for small x >= 0.
double log1p_minus_x(double x);
}  // namespace detail

}  // namespace vortex
