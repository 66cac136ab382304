#include "vortex/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "vortex/errors.hpp"

namespace vortex {

namespace {

constexpr double kStartFraction = 1e-6;
constexpr double kSubstepGrowth = 1.01;
constexpr double kOverflowLimit = 1e200;

struct State {
  double u;
  double v;
};

struct Rhs {
  double n2;
  double alpha;
  double kappa;

  State operator()(double r, const State& y) const {
    const double u2 = y.u * y.u;
    return {y.v, -y.v / r + (n2 / (r * r) - 2.0 * u2 / (1.0 + alpha * u2) + 2.0 * kappa) * y.u};
  }
};

State rk4_step(const Rhs& f, double r, const State& y, double h) {
  const State k1 = f(r, y);
  const State k2 = f(r + 0.5 * h, {y.u + 0.5 * h * k1.u, y.v + 0.5 * h * k1.v});
  const State k3 = f(r + 0.5 * h, {y.u + 0.5 * h * k2.u, y.v + 0.5 * h * k2.v});
  const State k4 = f(r + h, {y.u + h * k3.u, y.v + h * k3.v});
  return {y.u + h / 6.0 * (k1.u + 2.0 * k2.u + 2.0 * k3.u + k4.u),
          y.v + h / 6.0 * (k1.v + 2.0 * k2.v + 2.0 * k3.v + k4.v)};
}

enum class Outcome { kStaysPositive, kCrossesZero };

// Integrates the shot; with stop_on_crossing the run ends at the first
// interior sign change.
Outcome integrate(double kappa, double c, const Params& p, int steps, bool stop_on_crossing,
                  ShootProfile* out) {
  const int m = std::abs(p.n);
  const double R = p.R;
  const double h = R / steps;
  const Rhs f{p.n_squared(), p.alpha, kappa};

  if (out) {
    out->params = p;
    out->kappa = kappa;
    out->core_slope = c;
    out->r.resize(steps + 1);
    out->u.assign(steps + 1, 0.0);
    out->du.assign(steps + 1, 0.0);
    for (int i = 0; i <= steps; ++i) out->r[i] = h * i;
    out->r.back() = R;
    out->du[0] = m == 1 ? c : 0.0;
  }
  if (c == 0.0) return Outcome::kStaysPositive;

  // Series start and geometric sub-steps across the first cell.
  double r = kStartFraction * R;
  State y{c * std::pow(r, m), m * c * std::pow(r, m - 1)};
  const int substeps =
      std::max(1, static_cast<int>(std::ceil(std::log(h / r) / std::log(kSubstepGrowth))));
  const double growth = std::pow(h / r, 1.0 / substeps);
  for (int k = 0; k < substeps; ++k) {
    const double next = (k + 1 == substeps) ? h : r * growth;
    y = rk4_step(f, r, y, next - r);
    r = next;
  }

  Outcome outcome = Outcome::kStaysPositive;
  for (int i = 1; i <= steps; ++i) {
    if (i > 1) {
      y = rk4_step(f, h * (i - 1), y, h);
    }
    if (!std::isfinite(y.u) || !std::isfinite(y.v) || std::abs(y.u) > kOverflowLimit) {
      throw Overflow("shoot: solution diverged at r = " + std::to_string(h * i));
    }
    if (out) {
      out->u[i] = y.u;
      out->du[i] = y.v;
    }
    if (i < steps && y.u < 0.0) {
      outcome = Outcome::kCrossesZero;
      if (stop_on_crossing) return outcome;
    }
  }
  if (y.u < 0.0) outcome = Outcome::kCrossesZero;
  return outcome;
}

Outcome classify(double kappa, double c, const Params& p, int steps) {
  try {
    return integrate(kappa, c, p, steps, true, nullptr);
  } catch (const Overflow&) {
    // Divergence without a sign change: the shot never came back down.
    return Outcome::kStaysPositive;
  }
}

}  // namespace

double ShootProfile::max_amplitude() const {
  double m = 0.0;
  for (double v : u) m = std::max(m, std::abs(v));
  return m;
}

bool ShootProfile::has_interior_node() const {
  for (std::size_t i = 1; i + 1 < u.size(); ++i) {
    if (u[i] < 0.0) return true;
  }
  return false;
}

double ShootProfile::flux() const {
  const std::size_t n = r.size();
  if (n < 3) return 0.0;
  const double h = r[1] - r[0];
  double s = 0.0;
  const auto f = [&](std::size_t i) { return r[i] * u[i] * u[i]; };
  const std::size_t last = (n - 1) % 2 == 0 ? n - 1 : n - 2;
  for (std::size_t i = 0; i < last; i += 2) s += f(i) + 4.0 * f(i + 1) + f(i + 2);
  s *= h / 3.0;
  if (last != n - 1) s += 0.5 * h * (f(n - 2) + f(n - 1));
  return 2.0 * std::numbers::pi * s;
}

RadialField ShootProfile::resample(MeshPtr mesh) const {
  if (!mesh) throw ConfigError("resample: null mesh");
  if (std::abs(mesh->R() - params.R) > 1e-12 * params.R) {
    throw ConfigError("resample: mesh R does not match the shot");
  }
  const double h = r[1] - r[0];
  const auto& rq = mesh->r();
  Eigen::VectorXd us(rq.size()), dus(rq.size());
  const std::size_t cells = r.size() - 1;
  for (Eigen::Index q = 0; q < rq.size(); ++q) {
    std::size_t i = std::min(cells - 1, static_cast<std::size_t>(rq[q] / h));
    const double s = (rq[q] - r[i]) / h;
    const double s2 = s * s;
    const double s3 = s2 * s;
    const double h00 = 2 * s3 - 3 * s2 + 1, h10 = s3 - 2 * s2 + s;
    const double h01 = -2 * s3 + 3 * s2, h11 = s3 - s2;
    us[q] = h00 * u[i] + h10 * h * du[i] + h01 * u[i + 1] + h11 * h * du[i + 1];
    const double d00 = (6 * s2 - 6 * s) / h, d10 = 3 * s2 - 4 * s + 1;
    const double d01 = (-6 * s2 + 6 * s) / h, d11 = 3 * s2 - 2 * s;
    dus[q] = d00 * u[i] + d10 * du[i] + d01 * u[i + 1] + d11 * du[i + 1];
  }
  return RadialField::from_samples(std::move(mesh), std::move(us), std::move(dus));
}

ShootProfile shoot(double kappa, double c, const Params& p, int steps) {
  p.validate();
  if (!(c >= 0.0)) throw DomainError("shoot: core slope c must be nonnegative");
  if (steps < kMinShootSteps) throw DomainError("shoot: need at least 4096 steps");
  ShootProfile prof;
  integrate(kappa, c, p, steps, false, &prof);
  return prof;
}

ShootProfile profile_for_kappa(double kappa, const Params& p, const ShootingOptions& options) {
  p.validate();
  if (options.steps < kMinShootSteps) throw DomainError("profile_for_kappa: need at least 4096 steps");
  if (!(options.c_min > 0.0 && options.c_max > options.c_min)) {
    throw DomainError("profile_for_kappa: invalid amplitude scan range");
  }

  const double decades = std::log10(options.c_max / options.c_min);
  const int samples = std::max(2, static_cast<int>(std::ceil(decades * options.scan_per_decade)) + 1);
  const double ratio = std::pow(options.c_max / options.c_min, 1.0 / (samples - 1));

  double lo = 0.0, hi = 0.0;
  int brackets = 0;
  double c_prev = options.c_min;
  Outcome prev = classify(kappa, c_prev, p, options.steps);
  for (int k = 1; k < samples; ++k) {
    const double c = options.c_min * std::pow(ratio, k);
    const Outcome cur = classify(kappa, c, p, options.steps);
    if (prev == Outcome::kStaysPositive && cur == Outcome::kCrossesZero) {
      if (brackets == 0) {
        lo = c_prev;
        hi = c;
      }
      ++brackets;
    }
    prev = cur;
    c_prev = c;
  }
  if (brackets == 0) {
    throw NoBracket("profile_for_kappa: no amplitude in [" + std::to_string(options.c_min) + ", " +
                    std::to_string(options.c_max) + "] lands on u(R) = 0 at kappa = " +
                    std::to_string(kappa));
  }

  ShootProfile best = shoot(kappa, lo, p, options.steps);
  for (int it = 0; it < 200; ++it) {
    if (std::abs(best.terminal()) <= options.terminal_tol * best.max_amplitude()) break;
    if (hi - lo <= 4.0 * std::numeric_limits<double>::epsilon() * hi) break;
    const double mid = std::sqrt(lo * hi);
    const double c = (mid > lo && mid < hi) ? mid : 0.5 * (lo + hi);
    if (classify(kappa, c, p, options.steps) == Outcome::kStaysPositive) {
      lo = c;
      best = shoot(kappa, lo, p, options.steps);
    } else {
      hi = c;
    }
  }
  best.multiple_brackets = brackets > 1;
  return best;
}

std::vector<FluxCurvePoint> flux_of_kappa(std::span<const double> kappas, const Params& p,
                                          const ShootingOptions& options) {
  std::vector<FluxCurvePoint> curve;
  curve.reserve(kappas.size());
  for (double kappa : kappas) {
    FluxCurvePoint pt;
    pt.kappa = kappa;
    try {
      const ShootProfile prof = profile_for_kappa(kappa, p, options);
      pt.flux = prof.flux();
      pt.max_amplitude = prof.max_amplitude();
      pt.ok = true;
    } catch (const Error& e) {
      pt.error = e.what();
    }
    curve.push_back(std::move(pt));
  }
  return curve;
}

}  // namespace vortex
