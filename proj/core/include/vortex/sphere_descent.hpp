#pragma once

#include <functional>
#include <vector>

#include <Eigen/Core>

namespace vortex {

enum class DescentMethod {
  kSteepest,  ///< projected gradient with Armijo backtracking
  kLbfgs,     ///< limited-memory BFGS directions in the tangent space
};

struct SphereDescentOptions {
  DescentMethod method = DescentMethod::kLbfgs;
  int max_iters = 5000;
  double grad_tol = 1e-8;
  double armijo_c = 1e-4;
  double backtrack = 0.5;
  int max_backtracks = 60;
  int memory = 10;
};

struct SphereDescentResult {
  Eigen::VectorXd x;
  double value = 0.0;
  double grad_norm = 0.0;  ///< norm of the Riemannian (projected) gradient
  int iterations = 0;
  bool converged = false;
  double max_radius_drift = 0.0;  ///< max | ||x||^2 - radius^2 | / radius^2 over iterates
  std::vector<double> trace;      ///< objective after every accepted step
};

/// Objective on R^N: returns f(x) and writes the Euclidean gradient. A
/// non-finite return marks x as infeasible; the line search backs off.
using SphereObjective = std::function<double(const Eigen::VectorXd& x, Eigen::VectorXd& grad)>;

/// Minimizes f over the sphere ||x||^2 = radius_sq. Steps move along a
/// tangent direction and are retracted radially, x <- sqrt(radius_sq) x / ||x||.
SphereDescentResult minimize_on_sphere(const SphereObjective& f, Eigen::VectorXd x0,
                                       double radius_sq, const SphereDescentOptions& options);

}  // namespace vortex
