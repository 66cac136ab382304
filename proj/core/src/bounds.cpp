#include "vortex/bounds.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "vortex/errors.hpp"
#include "vortex/special.hpp"
#include "vortex/tent.hpp"

namespace vortex {

namespace {

double tent_core_factor(const Params& p) {
  return 1.0 + p.n_squared() * (2.0 * std::numbers::ln2 - 1.0);
}

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(6);
  os << v;
  return os.str();
}

}  // namespace

double first_bessel_zero() {
  static const double r0 = special::bessel_j_zero(0, 1);
  return r0;
}

double kappa_upper_bound(const Params& p) {
  const double r0 = first_bessel_zero();
  return p.inv_alpha() - (p.n_squared() + r0 * r0) / (2.0 * p.R * p.R);
}

double kappa_lower_bound(const Params& p, double Q0) {
  if (!(Q0 > 0.0)) throw DomainError("kappa_lower_bound: Q0 must be positive");
  const double b2 = 3.0 * Q0 / (std::numbers::pi * p.R * p.R);
  const double x = p.alpha * b2;
  // 1/alpha - 3 bracket(x) / (alpha^2 b^2) = -3 (bracket(x) - x/3) / (alpha x)
  const double saturation = -3.0 * tent_log_bracket_remainder(x) / (p.alpha * x);
  return saturation - 6.0 / (p.R * p.R) * tent_core_factor(p);
}

double radius_indefinite(const Params& p, double kappa) {
  const double gap = p.inv_alpha() - kappa;
  if (!(gap > 0.0)) return std::numeric_limits<double>::infinity();
  return std::sqrt(12.0 * tent_core_factor(p) / gap);
}

double radius_nehari(const Params& p, double kappa) {
  const double gap = p.inv_alpha() - kappa;
  if (!(gap > 0.0)) return std::numeric_limits<double>::infinity();
  return std::sqrt(6.0 * tent_core_factor(p) / gap);
}

BoundsReport bounds_report(const Params& p, double Q0, std::optional<double> kappa) {
  p.validate();
  if (!(Q0 > 0.0)) throw DomainError("bounds_report: Q0 must be positive");
  BoundsReport rep;
  rep.params = p;
  rep.Q0 = Q0;
  rep.r0 = first_bessel_zero();
  rep.kappa_upper = kappa_upper_bound(p);
  rep.kappa_lower = kappa_lower_bound(p, Q0);
  rep.kappa_interval = nehari_kappa_interval(p);
  if (kappa) {
    rep.kappa = *kappa;
  } else {
    rep.kappa = 0.5 * (rep.kappa_lower + rep.kappa_upper);
    rep.kappa_assumed = true;
  }
  rep.sigma = rep.kappa_upper - rep.kappa;
  rep.winding_negative = std::abs(p.n) >= Q0 / std::numbers::pi;
  rep.small_flux = Q0 <= 0.25;
  // n^2 + 2 r^2 kappa is monotone in r, so checking the endpoints suffices.
  rep.small_flux_condition = p.n_squared() > 0.0 && p.n_squared() + 2.0 * p.R * p.R * rep.kappa > 0.0;
  rep.small_flux_excluded = rep.small_flux && rep.small_flux_condition;
  rep.R_indefinite = radius_indefinite(p, rep.kappa);
  rep.R_nehari = radius_nehari(p, rep.kappa);
  return rep;
}

std::vector<BoundViolation> check_solution_against_bounds(const SolveResult& res,
                                                          const BoundsReport& rep) {
  std::vector<BoundViolation> out;
  const double kappa = res.kappa;
  const double sigma = rep.kappa_upper - kappa;
  if (!(sigma > 0.0)) {
    out.push_back({"kappa_upper",
                   "kappa " + fmt(kappa) + " exceeds the finite-energy upper bound " +
                       fmt(rep.kappa_upper) + " (sigma = " + fmt(sigma) + ")",
                   false});
  }
  if (kappa < rep.kappa_lower) {
    out.push_back({"kappa_lower",
                   "kappa " + fmt(kappa) + " is below the flux lower bound " + fmt(rep.kappa_lower),
                   false});
  }
  if (rep.winding_negative && !(kappa < 0.0)) {
    out.push_back({"winding_sign",
                   "|n| >= Q0/pi requires kappa < 0 but kappa = " + fmt(kappa), false});
  }
  if (rep.small_flux_excluded && res.flux > 0.0) {
    out.push_back({"small_flux", "nontrivial solution reported for an excluded small flux", false});
  }
  if (!(kappa > 0.0)) {
    out.push_back({"positive_decay",
                   "positive-decay condition unmet: kappa = " + fmt(kappa) +
                       " <= 0, no exponential confinement",
                   true});
  }
  return out;
}

bool has_hard_violation(const std::vector<BoundViolation>& violations) {
  for (const auto& v : violations) {
    if (!v.advisory) return true;
  }
  return false;
}

DecayFit decay_fit(const RadialField& u, double kappa, double lo_frac, double hi_frac) {
  if (!(kappa > 0.0)) throw DomainError("decay_fit: the decay estimate needs kappa > 0");
  if (!(lo_frac > 0.5 && hi_frac < 0.95 && lo_frac < hi_frac)) {
    throw DomainError("decay_fit: window must lie inside (0.5 R, 0.95 R)");
  }
  const double R = u.mesh().R();
  DecayFit fit;
  fit.r_window = {lo_frac * R, hi_frac * R};
  fit.threshold = -0.9 * std::sqrt(2.0 * kappa);

  const auto& r = u.mesh().r();
  const auto& v = u.u();
  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  int count = 0;
  for (Eigen::Index q = 0; q < r.size(); ++q) {
    if (r[q] < fit.r_window.first || r[q] > fit.r_window.second) continue;
    if (!(v[q] != 0.0)) continue;
    const double y = std::log(v[q] * v[q]);
    sx += r[q];
    sy += y;
    sxx += r[q] * r[q];
    sxy += r[q] * y;
    ++count;
  }
  if (count < 2) throw DomainError("decay_fit: fewer than two usable samples in the window");
  const double denom = count * sxx - sx * sx;
  fit.slope = (count * sxy - sx * sy) / denom;
  fit.C_kappa = std::exp((sy - fit.slope * sx) / count);
  fit.passes = fit.slope <= fit.threshold;
  return fit;
}

}  // namespace vortex
