#include "vortex/optimizer.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <random>

#include "vortex/bounds.hpp"
#include "vortex/model.hpp"

namespace vortex {

namespace {

// Field-dependent pieces of F and its gradient at the quadrature nodes.
struct Evaluation {
  double value;
  Eigen::VectorXd gradient;
};

Evaluation evaluate_action(const Eigen::VectorXd& a, const BasisSet& basis, const Params& p,
                           double kappa) {
  const Mesh& mesh = basis.mesh();
  const auto& r = mesh.r();
  const auto& w = mesh.w();
  const Eigen::VectorXd u = basis.values().transpose() * a;
  const Eigen::VectorXd du = basis.derivatives().transpose() * a;
  const double n2 = p.n_squared();
  const double inv_alpha2 = 1.0 / (p.alpha * p.alpha);

  Eigen::VectorXd value_weight(r.size());
  Eigen::VectorXd slope_weight(r.size());
  double value = 0.0;
  for (Eigen::Index q = 0; q < r.size(); ++q) {
    const double u2 = u[q] * u[q];
    value += w[q] * (0.5 * (r[q] * du[q] * du[q] + n2 * u2 / r[q]) +
                     inv_alpha2 * r[q] * detail::log1p_minus_x(p.alpha * u2) + kappa * r[q] * u2);
    value_weight[q] =
        w[q] * (n2 * u[q] / r[q] - 2.0 * r[q] * u2 * u[q] / (1.0 + p.alpha * u2) + 2.0 * kappa * r[q] * u[q]);
    slope_weight[q] = w[q] * r[q] * du[q];
  }
  Eigen::VectorXd grad = basis.values() * value_weight + basis.derivatives() * slope_weight;
  return {value, std::move(grad)};
}

void require_positive_flux(double Q0) {
  if (!(Q0 > 0.0) || !std::isfinite(Q0)) throw DomainError("prescribed flux Q0 must be positive");
}

// Flips the coefficient sign so that the field is predominantly nonnegative.
void canonicalize_sign(Eigen::VectorXd& a, const BasisSet& basis) {
  const Eigen::VectorXd u = basis.values().transpose() * a;
  const double weighted = basis.mesh().w().dot(basis.mesh().r().cwiseProduct(u));
  if (weighted < 0.0) a = -a;
}

Eigen::VectorXd perturbed(const Eigen::VectorXd& a, std::mt19937_64& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  Eigen::VectorXd noise(a.size());
  for (Eigen::Index i = 0; i < a.size(); ++i) noise[i] = normal(rng);
  const double scale = 0.3 * a.norm() / std::sqrt(static_cast<double>(a.size()));
  return a + scale * noise;
}

void fill_diagnostics(SolveResult& res, const Params& p) {
  const RadialField u = res.field();
  res.flux = energy_flux(u);
  res.action = action_I(u, p).value;
  res.action_kappa = res.action + res.kappa * res.flux / (2.0 * std::numbers::pi);
  if (res.flux > 0.0) res.kappa_recovered = kappa_from_field(u, p, res.flux);
  if (res.basis->smooth()) {
    res.residual = strong_residual(u, p, res.kappa);
  } else {
    const BasisPtr smoothing = build_basis(BasisKind::kSpectralSine, res.basis->size(), p.R);
    res.residual = strong_residual(u, p, res.kappa, smoothing);
  }
}

}  // namespace

void SolverSettings::validate() const {
  if (max_iters <= 0) throw ConfigError("max_iters must be positive");
  if (!(grad_tol > 0.0)) throw ConfigError("grad_tol must be positive");
  if (!(armijo_c > 0.0 && armijo_c < 1.0)) throw ConfigError("armijo_c must lie in (0, 1)");
  if (!(backtrack > 0.0 && backtrack < 1.0)) throw ConfigError("backtrack must lie in (0, 1)");
  if (restarts <= 0) throw ConfigError("restarts must be positive");
  if (!(nehari_bisect_tol > 0.0)) throw ConfigError("nehari_bisect_tol must be positive");
}

SphereDescentOptions SolverSettings::descent_options() const {
  SphereDescentOptions o;
  o.method = method;
  o.max_iters = max_iters;
  o.grad_tol = grad_tol;
  o.armijo_c = armijo_c;
  o.backtrack = backtrack;
  return o;
}

ObjectiveValue objective_and_gradient(const Eigen::Ref<const Eigen::VectorXd>& a,
                                      const BasisSet& basis, const Params& p) {
  if (a.size() != basis.size()) throw DimensionError("objective_and_gradient: coefficient size mismatch");
  Evaluation e = evaluate_action(a, basis, p, 0.0);
  return {e.value, std::move(e.gradient)};
}

Eigen::VectorXd initial_guess(const Params& p, const BasisSet& basis, double Q0) {
  const auto& r = basis.mesh().r();
  const int m = std::abs(p.n);
  Eigen::VectorXd f(r.size());
  for (Eigen::Index q = 0; q < r.size(); ++q) f[q] = std::pow(r[q] / p.R, m) * (p.R - r[q]);
  Eigen::VectorXd a = project(f, basis);
  a *= std::sqrt(Q0) / a.norm();
  return a;
}

SolveResult minimize_sphere(double Q0, const Params& p, const BasisPtr& basis,
                            const SolverSettings& settings) {
  require_positive_flux(Q0);
  p.validate();
  settings.validate();
  if (!basis) throw ConfigError("minimize_sphere: null basis");
  if (std::abs(basis->R() - p.R) > 1e-12 * p.R) throw ConfigError("basis R does not match Params R");

  const SphereObjective objective = [&](const Eigen::VectorXd& a, Eigen::VectorXd& grad) {
    Evaluation e = evaluate_action(a, *basis, p, 0.0);
    grad = std::move(e.gradient);
    return e.value;
  };

  const Eigen::VectorXd start = initial_guess(p, *basis, Q0);
  std::mt19937_64 rng(settings.seed);

  SolveResult best;
  best.basis = basis;
  double best_value = std::numeric_limits<double>::infinity();
  bool best_converged = false;
  const SphereDescentOptions options = settings.descent_options();

  for (int attempt = 0; attempt < settings.restarts; ++attempt) {
    const Eigen::VectorXd x0 = attempt == 0 ? start : perturbed(start, rng);
    const SphereDescentResult run = minimize_on_sphere(objective, x0, Q0, options);
    // Converged runs always beat unconverged ones.
    const bool better = (run.converged && !best_converged) ||
                        (run.converged == best_converged && run.value < best_value);
    if (better) {
      best_value = run.value;
      best_converged = run.converged;
      best.coeffs = run.x;
      best.grad_norm = run.grad_norm;
      best.iterations = run.iterations;
      best.converged = run.converged;
      best.restart_index = attempt;
    }
  }

  canonicalize_sign(best.coeffs, *basis);
  best.kappa = kappa_from_field(best.field(), p, Q0);
  fill_diagnostics(best, p);
  if (!best.converged) {
    throw NotConverged("minimize_sphere: no restart reached grad_tol (best |grad| = " +
                           std::to_string(best.grad_norm) + ")",
                       best);
  }
  return best;
}

double nehari_scale(const RadialField& u, const Params& p, double kappa, double tol) {
  const double g0 = gamma_big(0.0, u, p, kappa);
  const double ginf = gamma_infinity(u, p, kappa);
  if (!(g0 > 0.0) || !(ginf < 0.0)) {
    throw NoSignChange("nehari_scale: Gamma(0,u) = " + std::to_string(g0) +
                           ", Gamma(inf,u) = " + std::to_string(ginf) + "; no root in t",
                       g0, ginf);
  }

  // Gamma(t) = base + (1/alpha) \int r u^2 / (1 + alpha t^2 u^2)
  const auto& r = u.mesh().r();
  const auto& w = u.mesh().w();
  const Eigen::VectorXd ru2 = w.cwiseProduct(r).cwiseProduct(u.u().cwiseAbs2());
  const Eigen::VectorXd u2 = u.u().cwiseAbs2();
  const double base = ginf;
  const auto gamma = [&](double t) {
    const double t2 = t * t;
    double s = 0.0;
    for (Eigen::Index q = 0; q < r.size(); ++q) s += ru2[q] / (1.0 + p.alpha * t2 * u2[q]);
    return base + s / p.alpha;
  };

  double lo = 0.0;
  double hi = 1.0;
  while (gamma(hi) >= 0.0) {
    lo = hi;
    hi *= 2.0;
    if (hi > 1e150) throw NoSignChange("nehari_scale: root bracket diverged", g0, ginf);
  }
  double mid = 0.5 * (lo + hi);
  for (int it = 0; it < 400; ++it) {
    mid = 0.5 * (lo + hi);
    const double gm = gamma(mid);
    if (std::abs(gm) <= tol) break;
    if (gm > 0.0) {
      lo = mid;
    } else {
      hi = mid;
    }
    if (hi - lo <= 4.0 * std::numeric_limits<double>::epsilon() * hi) break;
  }
  return mid;
}

std::pair<double, double> nehari_kappa_interval(const Params& p) {
  const double r0 = first_bessel_zero();
  const double shift = (p.n_squared() + r0 * r0) / (2.0 * p.R * p.R);
  return {-shift, p.inv_alpha() - shift};
}

SolveResult minimize_nehari(double kappa, const Params& p, const BasisPtr& basis,
                            const SolverSettings& settings) {
  p.validate();
  settings.validate();
  if (!basis) throw ConfigError("minimize_nehari: null basis");
  if (std::abs(basis->R() - p.R) > 1e-12 * p.R) throw ConfigError("basis R does not match Params R");

  const auto [lower, upper] = nehari_kappa_interval(p);
  if (!(kappa > lower && kappa < upper)) {
    throw IntervalError("minimize_nehari: kappa = " + std::to_string(kappa) + " outside (" +
                        std::to_string(lower) + ", " + std::to_string(upper) + ")");
  }
  const double tol = settings.nehari_bisect_tol;
  const SphereObjective objective = [&](const Eigen::VectorXd& v, Eigen::VectorXd& grad) {
    const RadialField direction = synthesize(v, basis);
    double t0 = 0.0;
    try {
      t0 = nehari_scale(direction, p, kappa, tol);
    } catch (const NoSignChange&) {
      grad.setZero(v.size());
      return std::numeric_limits<double>::infinity();
    }
    // d/dv I_kappa(t0(v) v) = t0 I_kappa'(t0 v): the t0'(v) term is multiplied
    // by <I_kappa'(t0 v), v> = 2 t0 Gamma(t0, v) = 0.
    const Eigen::VectorXd scaled = t0 * v;
    Evaluation e = evaluate_action(scaled, *basis, p, 0.0);
    grad = t0 * (e.gradient + kappa / std::numbers::pi * scaled);
    return e.value + kappa * scaled.squaredNorm() / (2.0 * std::numbers::pi);
  };

  const Eigen::VectorXd start = initial_guess(p, *basis, 1.0);
  std::mt19937_64 rng(settings.seed);
  const SphereDescentOptions options = settings.descent_options();

  SolveResult best;
  best.basis = basis;
  best.coeffs = Eigen::VectorXd::Zero(basis->size());
  double best_value = std::numeric_limits<double>::infinity();
  bool any_feasible = false;

  for (int attempt = 0; attempt < settings.restarts; ++attempt) {
    const Eigen::VectorXd x0 = attempt == 0 ? start : perturbed(start, rng);
    Eigen::VectorXd probe(x0.size());
    if (!std::isfinite(objective(x0 / x0.norm(), probe))) continue;
    any_feasible = true;
    const SphereDescentResult run = minimize_on_sphere(objective, x0, 1.0, options);
    const bool better = (run.converged && !best.converged) ||
                        (run.converged == best.converged && run.value < best_value);
    if (better) {
      best_value = run.value;
      const double t0 = nehari_scale(synthesize(run.x, basis), p, kappa, tol);
      best.coeffs = t0 * run.x;
      best.grad_norm = run.grad_norm;
      best.iterations = run.iterations;
      best.converged = run.converged;
      best.restart_index = attempt;
    }
  }

  best.kappa = kappa;
  if (!any_feasible) {
    throw NotConverged("minimize_nehari: no starting direction can be scaled onto the Nehari "
                       "manifold at kappa = " + std::to_string(kappa),
                       best);
  }
  canonicalize_sign(best.coeffs, *basis);
  fill_diagnostics(best, p);
  if (!best.converged) {
    throw NotConverged("minimize_nehari: no restart reached grad_tol (best |grad| = " +
                           std::to_string(best.grad_norm) + ")",
                       best);
  }
  return best;
}

}  // namespace vortex
