#pragma once

#include <functional>
#include <optional>

#include <Eigen/Core>

#include "vortex/basis.hpp"
#include "vortex/quadrature.hpp"

namespace vortex {

/// A radial amplitude u(r) on [0, R], held as samples of u and u_r (and u_rr
/// when available) at the quadrature nodes of its mesh.
///
/// Fields synthesized from a basis also keep the basis and coefficients, so
/// they can be evaluated at arbitrary r. Sampled fields (closed-form profiles,
/// interpolated shooting solutions) only carry node samples.
class RadialField {
 public:
  static RadialField from_samples(MeshPtr mesh, Eigen::VectorXd u, Eigen::VectorXd du,
                                  std::optional<Eigen::VectorXd> d2u = std::nullopt);

  const Mesh& mesh() const { return *mesh_; }
  const MeshPtr& mesh_ptr() const { return mesh_; }

  const Eigen::VectorXd& u() const { return u_; }
  const Eigen::VectorXd& du() const { return du_; }
  bool has_second_derivative() const { return d2u_.has_value(); }
  const Eigen::VectorXd& d2u() const;

  /// Null for sampled fields.
  const BasisPtr& basis() const { return basis_; }
  const Eigen::VectorXd& coeffs() const { return coeffs_; }

  /// Requires a basis-backed field.
  double value_at(double r) const;
  double derivative_at(double r) const;

  /// t * u, sharing the mesh and basis.
  RadialField scaled(double t) const;

 private:
  friend RadialField synthesize(const Eigen::Ref<const Eigen::VectorXd>& coeffs, BasisPtr basis);
  RadialField() = default;

  MeshPtr mesh_;
  BasisPtr basis_;
  Eigen::VectorXd coeffs_;
  Eigen::VectorXd u_;
  Eigen::VectorXd du_;
  std::optional<Eigen::VectorXd> d2u_;
};

/// u = sum_j a_j psi_j. Throws DimensionError if coeffs.size() != basis size.
RadialField synthesize(const Eigen::Ref<const Eigen::VectorXd>& coeffs, BasisPtr basis);

/// Samples closed-form u, u_r (and optionally u_rr) on the mesh nodes.
RadialField sample_field(MeshPtr mesh, const std::function<double(double)>& u,
                         const std::function<double(double)>& du,
                         const std::function<double(double)>& d2u = {});

}  // namespace vortex
