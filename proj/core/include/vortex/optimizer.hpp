#pragma once

#include <cstdint>
#include <optional>

#include <Eigen/Core>

#include "vortex/basis.hpp"
#include "vortex/errors.hpp"
#include "vortex/field.hpp"
#include "vortex/params.hpp"
#include "vortex/sphere_descent.hpp"

namespace vortex {

struct SolverSettings {
  int max_iters = 5000;
  double grad_tol = 1e-8;  ///< on the projected-gradient norm
  double armijo_c = 1e-4;
  double backtrack = 0.5;
  int restarts = 4;  ///< total attempts; attempt 0 is the unperturbed initial guess
  std::uint64_t seed = 12345;
  double nehari_bisect_tol = 1e-12;  ///< on |Gamma(t0, u)|
  DescentMethod method = DescentMethod::kLbfgs;

  void validate() const;
  SphereDescentOptions descent_options() const;
};

/// A solution pair (u, kappa) in coefficient form plus diagnostics.
struct SolveResult {
  BasisPtr basis;
  Eigen::VectorXd coeffs;
  double kappa = 0.0;
  double kappa_recovered = 0.0;  ///< kappa_from_field(u) at the achieved flux
  double action = 0.0;           ///< I(u)
  double action_kappa = 0.0;     ///< I_kappa(u)
  double residual = 0.0;         ///< strong residual of the n-vortex equation
  double flux = 0.0;             ///< achieved Q(u)
  double grad_norm = 0.0;
  int iterations = 0;
  bool converged = false;
  int restart_index = -1;

  RadialField field() const { return synthesize(coeffs, basis); }
};

/// Thrown when no restart meets the gradient tolerance; carries the best
/// iterate found.
class NotConverged : public Error {
 public:
  NotConverged(const std::string& what, SolveResult best) : Error(what), best_(std::move(best)) {}
  const SolveResult& best() const { return best_; }

 private:
  SolveResult best_;
};

struct ObjectiveValue {
  double value = 0.0;
  Eigen::VectorXd gradient;
};

/// F(a) = I(sum_j a_j psi_j) and its exact gradient
///   dF/da_j = \int { r u_r psi_j' + n^2 u psi_j / r - 2 r u^3 psi_j / (1 + alpha u^2) }.
ObjectiveValue objective_and_gradient(const Eigen::Ref<const Eigen::VectorXd>& a,
                                      const BasisSet& basis, const Params& p);

/// Minimizes F on the sphere sum a_j^2 = Q0. Among restarts the lowest F
/// wins; the result is sign-canonicalized to u >= 0 and kappa is recovered
/// from the field. Throws DomainError for Q0 <= 0 and NotConverged when no
/// restart reaches grad_tol.
SolveResult minimize_sphere(double Q0, const Params& p, const BasisPtr& basis,
                            const SolverSettings& settings = {});

/// Ray scaling t0 > 0 with Gamma(t0, u) = 0, so t0 u lies on the Nehari
/// manifold. Bisection; Gamma is non-increasing in t. Throws NoSignChange
/// unless Gamma(0, u) > 0 > Gamma(inf, u).
double nehari_scale(const RadialField& u, const Params& p, double kappa, double tol = 1e-12);

/// Interval of propagation constants with a positive solution on the Nehari
/// manifold: (-(n^2 + r0^2) / 2R^2, 1/alpha - (n^2 + r0^2) / 2R^2).
std::pair<double, double> nehari_kappa_interval(const Params& p);

/// Minimizes I_kappa over the Nehari manifold at fixed kappa by minimizing
/// v -> I_kappa(t0(v) v) over unit-flux directions v. The achieved flux is an
/// output. Throws IntervalError when kappa is outside nehari_kappa_interval,
/// NotConverged when no direction can be scaled onto the manifold (e.g. R
/// below the Nehari radius threshold) or no restart reaches grad_tol.
SolveResult minimize_nehari(double kappa, const Params& p, const BasisPtr& basis,
                            const SolverSettings& settings = {});

/// Coefficients of r^|n| (R - r) scaled to flux Q0.
Eigen::VectorXd initial_guess(const Params& p, const BasisSet& basis, double Q0);

}  // namespace vortex
