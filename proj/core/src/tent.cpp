#include "vortex/tent.hpp"

#include <cmath>
#include <numbers>

#include "vortex/errors.hpp"

namespace vortex {

namespace {
const double kCentrifugalFactor = 2.0 * std::numbers::ln2 - 1.0;
}

TentProfile TentProfile::with_flux(const Params& p, double Q0) {
  if (!(Q0 >= 0.0)) throw DomainError("TentProfile::with_flux: Q0 must be nonnegative");
  return for_params(p, std::sqrt(3.0 * Q0 / (std::numbers::pi * p.R * p.R)));
}

double TentProfile::value(double r) const {
  if (r <= 0.0 || r >= 2.0 * a_half) return 0.0;
  return r <= a_half ? b / a_half * r : b / a_half * (2.0 * a_half - r);
}

double TentProfile::derivative(double r) const {
  if (r <= 0.0 || r >= 2.0 * a_half) return 0.0;
  return r < a_half ? b / a_half : -b / a_half;
}

double tent_log_bracket_remainder(double x) {
  if (x < 0.0) throw DomainError("tent_log_bracket: x must be nonnegative");
  if (x < 0.1) {
    // sum_{k>=2} (-1)^{k+1} x^k / (k (2k + 1))
    double power = x;
    double sum = 0.0;
    for (int k = 2; k < 60; ++k) {
      power *= -x;
      const double term = power / (k * (2.0 * k + 1.0));
      sum += term;
      if (std::abs(term) < 1e-20 * std::abs(sum)) break;
    }
    return sum;
  }
  const double s = std::sqrt(x);
  return std::log1p(x) - 2.0 + 2.0 * std::atan(s) / s - x / 3.0;
}

double tent_log_bracket(double x) { return x / 3.0 + tent_log_bracket_remainder(x); }

TentIntegrals tent_integrals(const TentProfile& t, const Params& p) {
  if (std::abs(t.a_half - 0.5 * p.R) > 1e-12 * p.R) {
    throw DomainError("tent_integrals: half-width must equal R/2");
  }
  const double a = t.a_half;
  const double b2 = t.b * t.b;
  TentIntegrals out;
  out.flux_moment = 2.0 / 3.0 * a * a * b2;
  out.kinetic = 2.0 * b2;
  out.centrifugal = 2.0 * b2 * kCentrifugalFactor;
  out.log_term = 2.0 * a * a * tent_log_bracket(p.alpha * b2);
  return out;
}

double tent_action(const TentProfile& t, const Params& p, double kappa) {
  const TentIntegrals ti = tent_integrals(t, p);
  const double a = t.a_half;
  // -(2/3) a^2 b^2 / alpha + 2 a^2 bracket(alpha b^2) / alpha^2, with the
  // leading x/3 of the bracket cancelled analytically.
  const double saturation =
      2.0 * a * a * tent_log_bracket_remainder(p.alpha * t.b * t.b) / (p.alpha * p.alpha);
  return 0.5 * (ti.kinetic + p.n_squared() * ti.centrifugal) + saturation + kappa * ti.flux_moment;
}

double tent_gamma_infinity(const TentProfile& t, const Params& p, double kappa) {
  return t.b * t.b *
         (1.0 + p.n_squared() * kCentrifugalFactor - (p.inv_alpha() - kappa) * p.R * p.R / 6.0);
}

RadialField sample_tent(const TentProfile& t, MeshPtr mesh) {
  return sample_field(
      std::move(mesh), [t](double r) { return t.value(r); },
      [t](double r) { return t.derivative(r); });
}

}  // namespace vortex
