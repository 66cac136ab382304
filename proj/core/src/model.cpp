#include "vortex/model.hpp"

#include <algorithm>
#include <cmath>
#include <iostream>
#include <numbers>

#include "vortex/errors.hpp"

namespace vortex {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

void check_domain(const RadialField& u, const Params& p) {
  if (std::abs(u.mesh().R() - p.R) > 1e-12 * p.R) {
    throw ConfigError("field mesh length R=" + std::to_string(u.mesh().R()) +
                      " does not match Params R=" + std::to_string(p.R));
  }
}

}  // namespace

namespace detail {

double log1p_minus_x(double x) {
  if (std::abs(x) < 1e-2) {
    // -x^2/2 + x^3/3 - ...; 12 terms reach below 1e-24 x^2.
    double term = x;
    double sum = 0.0;
    for (int k = 2; k <= 14; ++k) {
      term *= -x;
      sum += term / k;
    }
    return sum;
  }
  return std::log1p(x) - x;
}

}  // namespace detail

FunctionalBreakdown integrate_terms(const RadialField& u, const Params& p) {
  check_domain(u, p);
  const Mesh& mesh = u.mesh();
  const auto& r = mesh.r();
  const auto& w = mesh.w();
  const auto& v = u.u();
  const auto& dv = u.du();
  const double n2 = p.n_squared();

  FunctionalBreakdown b;
  for (Eigen::Index q = 0; q < r.size(); ++q) {
    const double u2 = v[q] * v[q];
    const double x = p.alpha * u2;
    b.kinetic += w[q] * r[q] * dv[q] * dv[q];
    b.centrifugal += w[q] * n2 * u2 / r[q];
    b.flux_moment += w[q] * r[q] * u2;
    b.log_term += w[q] * r[q] * std::log1p(x);
    b.saturable += w[q] * r[q] * u2 / (1.0 + x);
  }
  return b;
}

double energy_flux(const RadialField& u) {
  const Mesh& mesh = u.mesh();
  return kTwoPi * mesh.integrate(mesh.r().cwiseProduct(u.u().cwiseAbs2()));
}

FunctionalValue action_I(const RadialField& u, const Params& p) {
  FunctionalValue out;
  out.breakdown = integrate_terms(u, p);
  const auto& r = u.mesh().r();
  const auto& w = u.mesh().w();
  const auto& v = u.u();
  // -alpha^-1 r u^2 + alpha^-2 r ln(1 + alpha u^2) = alpha^-2 r (ln(1+x) - x)
  double remainder = 0.0;
  for (Eigen::Index q = 0; q < r.size(); ++q) {
    remainder += w[q] * r[q] * detail::log1p_minus_x(p.alpha * v[q] * v[q]);
  }
  out.value = 0.5 * (out.breakdown.kinetic + out.breakdown.centrifugal) +
              remainder / (p.alpha * p.alpha);
  return out;
}

FunctionalValue action_I_kappa(const RadialField& u, const Params& p, double kappa) {
  FunctionalValue out = action_I(u, p);
  out.value += kappa * out.breakdown.flux_moment;
  return out;
}

double action_I_by_parts(const RadialField& u, const Params& p) {
  check_domain(u, p);
  const auto& r = u.mesh().r();
  const auto& w = u.mesh().w();
  const auto& v = u.u();
  const auto& dv = u.du();
  const double n2 = p.n_squared();
  const double inv_alpha = p.inv_alpha();
  double s = 0.0;
  for (Eigen::Index q = 0; q < r.size(); ++q) {
    const double u2 = v[q] * v[q];
    s += w[q] * (0.5 * (r[q] * dv[q] * dv[q] + n2 * u2 / r[q]) - inv_alpha * r[q] * u2 -
                 inv_alpha * r[q] * r[q] * v[q] * dv[q] / (1.0 + p.alpha * u2));
  }
  return s;
}

double energy_E(const RadialField& u, const Params& p) {
  const FunctionalBreakdown b = integrate_terms(u, p);
  const double plain_centrifugal = b.centrifugal / p.n_squared();
  return 0.5 * (b.kinetic + plain_centrifugal + b.log_term);
}

double gamma_kappa(const RadialField& u, const Params& p, double kappa) {
  return gamma_big(1.0, u, p, kappa);
}

double gamma_big(double t, const RadialField& u, const Params& p, double kappa) {
  check_domain(u, p);
  const auto& r = u.mesh().r();
  const auto& w = u.mesh().w();
  const auto& v = u.u();
  const auto& dv = u.du();
  const double n2 = p.n_squared();
  const double t2 = t * t;
  double s = 0.0;
  for (Eigen::Index q = 0; q < r.size(); ++q) {
    const double u2 = v[q] * v[q];
    // -2 (1/alpha - kappa) r u^2 + 2/alpha r u^2 / (1 + alpha t^2 u^2)
    //   = 2 kappa r u^2 - 2 t^2 r u^4 / (1 + alpha t^2 u^2)
    const double coupling = 2.0 * kappa * r[q] * u2 - 2.0 * t2 * r[q] * u2 * u2 / (1.0 + p.alpha * t2 * u2);
    s += w[q] * (r[q] * dv[q] * dv[q] + n2 * u2 / r[q] + coupling);
  }
  return 0.5 * s;
}

double gamma_infinity(const RadialField& u, const Params& p, double kappa) {
  const FunctionalBreakdown b = integrate_terms(u, p);
  return 0.5 * (b.kinetic + b.centrifugal - 2.0 * (p.inv_alpha() - kappa) * b.flux_moment);
}

double kappa_from_field(const RadialField& u, const Params& p, double Q0) {
  if (!(Q0 > 0.0)) throw DomainError("kappa_from_field: Q0 must be positive");
  check_domain(u, p);
  const double flux = energy_flux(u);
  if (std::abs(flux - Q0) > 1e-6 * Q0) {
    std::clog << "warning: kappa_from_field: Q(u)=" << flux << " differs from Q0=" << Q0 << '\n';
  }
  const auto& r = u.mesh().r();
  const auto& w = u.mesh().w();
  const auto& v = u.u();
  const auto& dv = u.du();
  const double n2 = p.n_squared();
  double s = 0.0;
  for (Eigen::Index q = 0; q < r.size(); ++q) {
    const double u2 = v[q] * v[q];
    s += w[q] * (r[q] * dv[q] * dv[q] + n2 * u2 / r[q] - 2.0 * r[q] * u2 * u2 / (1.0 + p.alpha * u2));
  }
  return -std::numbers::pi / Q0 * s;
}

double strong_residual(const RadialField& u, const Params& p, double kappa) {
  check_domain(u, p);
  if (!u.has_second_derivative()) {
    throw UnsupportedBasis("strong_residual: field has no second derivative; pass a smoothing basis");
  }
  const auto& r = u.mesh().r();
  const auto& w = u.mesh().w();
  const auto& v = u.u();
  const auto& dv = u.du();
  const auto& d2v = u.d2u();
  const double n2 = p.n_squared();
  double s = 0.0;
  for (Eigen::Index q = 0; q < r.size(); ++q) {
    const double u2 = v[q] * v[q];
    const double defect = dv[q] + r[q] * d2v[q] - n2 * v[q] / r[q] +
                          2.0 * r[q] * u2 * v[q] / (1.0 + p.alpha * u2) - 2.0 * kappa * r[q] * v[q];
    s += w[q] * defect * defect;
  }
  return s;
}

double strong_residual(const RadialField& u, const Params& p, double kappa,
                       const BasisPtr& smoothing) {
  if (u.has_second_derivative()) return strong_residual(u, p, kappa);
  if (!smoothing || !smoothing->smooth()) {
    throw UnsupportedBasis("strong_residual: smoothing basis must provide second derivatives");
  }
  if (smoothing->mesh_ptr() == u.mesh_ptr()) {
    return strong_residual(synthesize(project(u.u(), *smoothing), smoothing), p, kappa);
  }
  if (!u.basis()) {
    throw UnsupportedBasis("strong_residual: sampled field lives on a different mesh than the smoothing basis");
  }
  const Eigen::VectorXd& rs = smoothing->mesh().r();
  Eigen::VectorXd samples(rs.size());
  for (Eigen::Index q = 0; q < rs.size(); ++q) samples[q] = u.value_at(rs[q]);
  return strong_residual(synthesize(project(samples, *smoothing), smoothing), p, kappa);
}

double FluxIdentity::relative_defect() const {
  const double scale = std::max(std::abs(lhs), std::abs(rhs));
  if (scale == 0.0) return 0.0;
  return std::abs(lhs - rhs) / scale;
}

FluxIdentity flux_identity(const RadialField& u, const Params& p, double kappa) {
  check_domain(u, p);
  const auto& r = u.mesh().r();
  const auto& w = u.mesh().w();
  const auto& v = u.u();
  const auto& dv = u.du();
  const double n2 = p.n_squared();
  FluxIdentity id;
  for (Eigen::Index q = 0; q < r.size(); ++q) {
    const double u2 = v[q] * v[q];
    id.lhs -= w[q] * r[q] * dv[q] * dv[q];
    id.rhs += w[q] * (n2 * u2 / r[q] + 2.0 * kappa * r[q] * u2 - 2.0 * r[q] * u2 * u2 / (1.0 + p.alpha * u2));
  }
  return id;
}

}  // namespace vortex
