#include "vortex/field.hpp"

#include <utility>

#include "vortex/errors.hpp"

namespace vortex {

RadialField RadialField::from_samples(MeshPtr mesh, Eigen::VectorXd u, Eigen::VectorXd du,
                                      std::optional<Eigen::VectorXd> d2u) {
  if (!mesh) throw ConfigError("RadialField: null mesh");
  if (u.size() != mesh->size() || du.size() != mesh->size() ||
      (d2u && d2u->size() != mesh->size())) {
    throw DimensionError("RadialField: sample count does not match quadrature nodes");
  }
  RadialField f;
  f.mesh_ = std::move(mesh);
  f.u_ = std::move(u);
  f.du_ = std::move(du);
  f.d2u_ = std::move(d2u);
  return f;
}

const Eigen::VectorXd& RadialField::d2u() const {
  if (!d2u_) throw UnsupportedBasis("field has no second-derivative samples");
  return *d2u_;
}

double RadialField::value_at(double r) const {
  if (!basis_) throw ConfigError("value_at: field is not backed by a basis");
  const Eigen::VectorXd raw = basis_->transform() * coeffs_;
  double s = 0.0;
  for (int k = 0; k < basis_->size(); ++k) s += raw[k] * basis_->raw_value(k, r);
  return s;
}

double RadialField::derivative_at(double r) const {
  if (!basis_) throw ConfigError("derivative_at: field is not backed by a basis");
  const Eigen::VectorXd raw = basis_->transform() * coeffs_;
  double s = 0.0;
  for (int k = 0; k < basis_->size(); ++k) s += raw[k] * basis_->raw_derivative(k, r);
  return s;
}

RadialField RadialField::scaled(double t) const {
  RadialField f = *this;
  f.u_ *= t;
  f.du_ *= t;
  if (f.d2u_) *f.d2u_ *= t;
  if (f.coeffs_.size() > 0) f.coeffs_ *= t;
  return f;
}

RadialField synthesize(const Eigen::Ref<const Eigen::VectorXd>& coeffs, BasisPtr basis) {
  if (!basis) throw ConfigError("synthesize: null basis");
  if (coeffs.size() != basis->size()) {
    throw DimensionError("synthesize: expected " + std::to_string(basis->size()) +
                         " coefficients, got " + std::to_string(coeffs.size()));
  }
  RadialField f;
  f.mesh_ = basis->mesh_ptr();
  f.coeffs_ = coeffs;
  f.u_ = basis->values().transpose() * coeffs;
  f.du_ = basis->derivatives().transpose() * coeffs;
  if (basis->smooth()) f.d2u_ = basis->second_derivatives().transpose() * coeffs;
  f.basis_ = std::move(basis);
  return f;
}

RadialField sample_field(MeshPtr mesh, const std::function<double(double)>& u,
                         const std::function<double(double)>& du,
                         const std::function<double(double)>& d2u) {
  if (!mesh) throw ConfigError("sample_field: null mesh");
  const Eigen::VectorXd& r = mesh->r();
  Eigen::VectorXd us(r.size()), dus(r.size());
  std::optional<Eigen::VectorXd> d2us;
  if (d2u) d2us.emplace(r.size());
  for (Eigen::Index q = 0; q < r.size(); ++q) {
    us[q] = u(r[q]);
    dus[q] = du(r[q]);
    if (d2u) (*d2us)[q] = d2u(r[q]);
  }
  return RadialField::from_samples(std::move(mesh), std::move(us), std::move(dus), std::move(d2us));
}

}  // namespace vortex
