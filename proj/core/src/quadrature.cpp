#include "vortex/quadrature.hpp"

#include <cmath>
#include <numbers>
#include <utility>

#include "vortex/errors.hpp"

namespace vortex {

namespace {

// Legendre P_m(x) and its derivative by the three-term recurrence.
std::pair<double, double> legendre_with_derivative(int m, double x) {
  double p0 = 1.0;
  double p1 = x;
  for (int k = 2; k <= m; ++k) {
    const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
    p0 = p1;
    p1 = p2;
  }
  const double dp = m * (x * p1 - p0) / (x * x - 1.0);
  return {p1, dp};
}

}  // namespace

GaussRule gauss_legendre(int points) {
  if (points < 1) throw ConfigError("gauss_legendre: need at least one point");
  GaussRule rule;
  rule.nodes.assign(points, 0.0);
  rule.weights.assign(points, 0.0);
  if (points == 1) {
    rule.weights[0] = 2.0;
    return rule;
  }
  for (int i = 0; i < (points + 1) / 2; ++i) {
    double x = std::cos(std::numbers::pi * (i + 0.75) / (points + 0.5));
    for (int it = 0; it < 100; ++it) {
      const auto [p, dp] = legendre_with_derivative(points, x);
      const double dx = p / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    const double dp = legendre_with_derivative(points, x).second;
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    rule.nodes[i] = -x;
    rule.nodes[points - 1 - i] = x;
    rule.weights[i] = w;
    rule.weights[points - 1 - i] = w;
  }
  if (points % 2 == 1) rule.nodes[points / 2] = 0.0;
  return rule;
}

Mesh::Mesh(double R, int n_cells, int points_per_cell)
    : R_(R), n_cells_(n_cells), points_per_cell_(points_per_cell) {
  if (!(R > 0.0)) throw ConfigError("Mesh: R must be positive");
  if (n_cells < 1) throw ConfigError("Mesh: n_cells must be positive");
  if (points_per_cell < 1) throw ConfigError("Mesh: points_per_cell must be positive");

  nodes_.resize(n_cells + 1);
  const double h = R / n_cells;
  for (int i = 0; i <= n_cells; ++i) nodes_[i] = h * i;
  nodes_.back() = R;

  const GaussRule rule = gauss_legendre(points_per_cell);
  r_.resize(static_cast<Eigen::Index>(n_cells) * points_per_cell);
  w_.resize(r_.size());
  Eigen::Index q = 0;
  for (int c = 0; c < n_cells; ++c) {
    const double left = nodes_[c];
    const double right = nodes_[c + 1];
    const double mid = 0.5 * (left + right);
    const double half = 0.5 * (right - left);
    for (int k = 0; k < points_per_cell; ++k, ++q) {
      r_[q] = mid + half * rule.nodes[k];
      w_[q] = half * rule.weights[k];
    }
  }
}

MeshPtr make_mesh(double R, int n_cells, int points_per_cell) {
  return std::make_shared<const Mesh>(R, n_cells, points_per_cell);
}

}  // namespace vortex
