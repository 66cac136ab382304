#include "vortex/sphere_descent.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>

#include "vortex/errors.hpp"

namespace vortex {

namespace {

Eigen::VectorXd tangent(const Eigen::VectorXd& x, const Eigen::VectorXd& v) {
  return v - (v.dot(x) / x.squaredNorm()) * x;
}

struct CurvaturePair {
  Eigen::VectorXd s;
  Eigen::VectorXd y;
  double rho;
};

// Two-loop recursion: returns H * g for the implicit inverse Hessian.
Eigen::VectorXd apply_inverse_hessian(const std::deque<CurvaturePair>& pairs,
                                      const Eigen::VectorXd& g) {
  Eigen::VectorXd q = g;
  std::vector<double> alphas(pairs.size());
  for (std::size_t i = pairs.size(); i-- > 0;) {
    alphas[i] = pairs[i].rho * pairs[i].s.dot(q);
    q -= alphas[i] * pairs[i].y;
  }
  if (!pairs.empty()) {
    const auto& last = pairs.back();
    q *= last.s.dot(last.y) / last.y.squaredNorm();
  }
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const double beta = pairs[i].rho * pairs[i].y.dot(q);
    q += (alphas[i] - beta) * pairs[i].s;
  }
  return q;
}

}  // namespace

SphereDescentResult minimize_on_sphere(const SphereObjective& f, Eigen::VectorXd x0,
                                       double radius_sq, const SphereDescentOptions& options) {
  if (!(radius_sq > 0.0)) throw DomainError("minimize_on_sphere: radius must be positive");
  if (x0.size() == 0 || !(x0.norm() > 0.0)) {
    throw DomainError("minimize_on_sphere: starting point must be nonzero");
  }
  if (!(options.backtrack > 0.0 && options.backtrack < 1.0)) {
    throw ConfigError("minimize_on_sphere: backtrack factor must lie in (0, 1)");
  }

  const double radius = std::sqrt(radius_sq);
  const auto retract = [radius](Eigen::VectorXd v) {
    v *= radius / v.norm();
    return v;
  };
  constexpr double kEps = std::numeric_limits<double>::epsilon();

  SphereDescentResult res;
  Eigen::VectorXd x = retract(std::move(x0));
  Eigen::VectorXd g(x.size());
  double fx = f(x, g);
  if (!std::isfinite(fx)) throw NumericalError("minimize_on_sphere: objective infeasible at start");
  Eigen::VectorXd pg = tangent(x, g);

  std::deque<CurvaturePair> pairs;
  double last_step = 0.0;
  const auto drift = [&](const Eigen::VectorXd& v) {
    return std::abs(v.squaredNorm() - radius_sq) / radius_sq;
  };
  res.max_radius_drift = drift(x);

  Eigen::VectorXd x_trial(x.size());
  Eigen::VectorXd g_trial(x.size());

  int it = 0;
  for (; it < options.max_iters; ++it) {
    const double gnorm = pg.norm();
    if (gnorm <= options.grad_tol) {
      res.converged = true;
      break;
    }

    bool use_memory = options.method == DescentMethod::kLbfgs && !pairs.empty();
    bool accepted = false;
    double f_trial = fx;
    double step = 0.0;
    Eigen::VectorXd d;

    for (int attempt = 0; attempt < 2 && !accepted; ++attempt) {
      if (use_memory) {
        d = tangent(x, -apply_inverse_hessian(pairs, pg));
        if (!(pg.dot(d) < -1e-10 * gnorm * d.norm())) {
          use_memory = false;
          pairs.clear();
        }
      }
      if (!use_memory) d = -pg;

      const double slope = pg.dot(d);
      if (use_memory) {
        step = 1.0;
      } else if (last_step > 0.0) {
        step = std::min(4.0 * last_step, radius / d.norm());
      } else {
        step = std::min(1.0, 0.1 * radius / d.norm());
      }

      for (int bt = 0; bt <= options.max_backtracks; ++bt) {
        x_trial = retract(x + step * d);
        f_trial = f(x_trial, g_trial);
        const double slack = 8.0 * kEps * std::abs(fx);
        if (std::isfinite(f_trial) && f_trial <= fx + options.armijo_c * step * slope + slack) {
          accepted = true;
          break;
        }
        step *= options.backtrack;
      }
      if (!accepted && use_memory) {
        use_memory = false;
        pairs.clear();
      } else if (!accepted) {
        break;
      }
    }
    if (!accepted) break;  // line search stalled

    const Eigen::VectorXd pg_trial = tangent(x_trial, g_trial);
    if (options.method == DescentMethod::kLbfgs) {
      const Eigen::VectorXd s = tangent(x_trial, x_trial - x);
      const Eigen::VectorXd y = pg_trial - tangent(x_trial, pg);
      const double sy = s.dot(y);
      if (sy > 1e-12 * s.norm() * y.norm()) {
        pairs.push_back({s, y, 1.0 / sy});
        if (static_cast<int>(pairs.size()) > options.memory) pairs.pop_front();
      }
      // Transport the stored pairs onto the new tangent space.
      for (auto& pr : pairs) {
        pr.s = tangent(x_trial, pr.s);
        pr.y = tangent(x_trial, pr.y);
        const double t = pr.s.dot(pr.y);
        pr.rho = t > 0.0 ? 1.0 / t : 0.0;
      }
      std::erase_if(pairs, [](const CurvaturePair& pr) { return !(pr.rho > 0.0); });
    }

    last_step = step;
    x = x_trial;
    g = g_trial;
    fx = f_trial;
    pg = pg_trial;
    res.trace.push_back(fx);
    res.max_radius_drift = std::max(res.max_radius_drift, drift(x));
  }

  res.x = x;
  res.value = fx;
  res.grad_norm = pg.norm();
  res.iterations = it;
  if (!res.converged && res.grad_norm <= options.grad_tol) res.converged = true;
  return res;
}

}  // namespace vortex
