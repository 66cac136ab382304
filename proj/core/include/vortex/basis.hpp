#pragma once

#include <memory>
#include <string>
#include <string_view>

#include <Eigen/Core>

#include "vortex/quadrature.hpp"

namespace vortex {

enum class BasisKind {
  kSpectralSine,  ///< sin(j pi r / R), j = 1..N; smooth, u_rr available
  kHatP1,         ///< piecewise-linear hats on the interior mesh nodes
};

std::string_view to_string(BasisKind kind);
BasisKind basis_kind_from_string(std::string_view name);  // "sine" | "hat"

/// Orthonormal radial basis {psi_j} under (u, v) = 2 pi \int_0^R r u v dr.
///
/// The raw family is orthonormalized through a Cholesky factor of its
/// weighted Gram matrix; psi_j = sum_k T(k, j) phi_k. Every member vanishes at
/// r = 0 and r = R. Samples of psi_j, psi_j' (and psi_j'' for smooth kinds)
/// at the mesh quadrature nodes are cached at construction; the object is
/// immutable afterwards.
class BasisSet {
 public:
  BasisSet(BasisKind kind, int size, MeshPtr mesh);

  BasisKind kind() const { return kind_; }
  int size() const { return size_; }
  bool smooth() const { return kind_ == BasisKind::kSpectralSine; }
  const Mesh& mesh() const { return *mesh_; }
  const MeshPtr& mesh_ptr() const { return mesh_; }
  double R() const { return mesh_->R(); }

  /// Raw-to-orthonormal change of basis (T^T G_raw T = I).
  const Eigen::MatrixXd& transform() const { return transform_; }

  /// Row j holds psi_j sampled at the quadrature nodes.
  const Eigen::MatrixXd& values() const { return psi_; }
  const Eigen::MatrixXd& derivatives() const { return dpsi_; }
  /// Only populated when smooth().
  const Eigen::MatrixXd& second_derivatives() const { return d2psi_; }

  /// Raw member k (0-based) and its derivatives at an arbitrary r.
  double raw_value(int k, double r) const;
  double raw_derivative(int k, double r) const;
  double raw_second_derivative(int k, double r) const;

  /// Orthonormal member j (0-based) at an arbitrary r.
  double value(int j, double r) const;

  /// Gram matrix 2 pi \int r psi_i psi_j dr of the orthonormal set,
  /// recomputed by quadrature.
  Eigen::MatrixXd gram() const;

 private:
  Eigen::MatrixXd raw_samples(int derivative) const;

  BasisKind kind_;
  int size_;
  MeshPtr mesh_;
  Eigen::MatrixXd transform_;
  Eigen::MatrixXd psi_;
  Eigen::MatrixXd dpsi_;
  Eigen::MatrixXd d2psi_;
};

using BasisPtr = std::shared_ptr<const BasisSet>;

/// Builds the orthonormal set of `size` functions on `mesh`. Hat bases need
/// size == mesh->n_cells() - 1.
BasisPtr build_basis(BasisKind kind, int size, MeshPtr mesh);

/// Convenience: picks the default mesh for the kind (512 cells for sine,
/// size + 1 elements for hats) when cells == 0.
BasisPtr build_basis(BasisKind kind, int size, double R, int cells = 0);

/// Returns T with T^T gram T = I from a Cholesky factorization.
/// Throws NumericalError if gram is not symmetric positive definite.
Eigen::MatrixXd orthonormalize(const Eigen::MatrixXd& gram);

/// Flux-inner-product coefficients a_j = 2 pi \int r f psi_j dr of a function
/// sampled at the basis quadrature nodes.
Eigen::VectorXd project(const Eigen::Ref<const Eigen::VectorXd>& samples, const BasisSet& basis);

}  // namespace vortex
