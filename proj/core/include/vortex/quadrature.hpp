#pragma once

#include <memory>
#include <utility>
#include <vector>

#include <Eigen/Core>

namespace vortex {

/// Gauss-Legendre nodes and weights on [-1, 1], nodes ascending.
struct GaussRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

GaussRule gauss_legendre(int points);

/// Uniform partition of [0, R] with a composite Gauss-Legendre rule on every
/// cell. Quadrature nodes are strictly interior, so integrands carrying 1/r
/// are never evaluated at the core.
class Mesh {
 public:
  Mesh(double R, int n_cells, int points_per_cell = 4);

  double R() const { return R_; }
  int n_cells() const { return n_cells_; }
  int points_per_cell() const { return points_per_cell_; }
  double h() const { return R_ / n_cells_; }

  /// Cell boundaries r_0 = 0 < ... < r_{n_cells} = R.
  const std::vector<double>& nodes() const { return nodes_; }

  /// Quadrature abscissae, ascending, and matching weights (sum = R).
  const Eigen::VectorXd& r() const { return r_; }
  const Eigen::VectorXd& w() const { return w_; }
  Eigen::Index size() const { return r_.size(); }

  /// Integral of a sampled integrand.
  double integrate(const Eigen::Ref<const Eigen::VectorXd>& f) const { return w_.dot(f); }

 private:
  double R_;
  int n_cells_;
  int points_per_cell_;
  std::vector<double> nodes_;
  Eigen::VectorXd r_;
  Eigen::VectorXd w_;
};

using MeshPtr = std::shared_ptr<const Mesh>;

inline constexpr int kDefaultSpectralCells = 512;

MeshPtr make_mesh(double R, int n_cells, int points_per_cell = 4);

}  // namespace vortex
