#include "vortex/basis.hpp"

#include <cmath>
#include <numbers>

#include <Eigen/Cholesky>

#include "vortex/errors.hpp"

namespace vortex {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;
}

std::string_view to_string(BasisKind kind) {
  switch (kind) {
    case BasisKind::kSpectralSine:
      return "sine";
    case BasisKind::kHatP1:
      return "hat";
  }
  return "unknown";
}

BasisKind basis_kind_from_string(std::string_view name) {
  if (name == "sine" || name == "spectral-sine") return BasisKind::kSpectralSine;
  if (name == "hat" || name == "hat-p1") return BasisKind::kHatP1;
  throw ConfigError("unknown basis kind '" + std::string(name) + "' (expected sine|hat)");
}

BasisSet::BasisSet(BasisKind kind, int size, MeshPtr mesh)
    : kind_(kind), size_(size), mesh_(std::move(mesh)) {
  if (!mesh_) throw ConfigError("BasisSet: null mesh");
  if (size_ < 2) throw ConfigError("BasisSet: need at least 2 basis functions");
  if (kind_ == BasisKind::kHatP1 && size_ != mesh_->n_cells() - 1) {
    throw ConfigError("BasisSet: hat basis size must equal n_cells - 1 (got N=" +
                      std::to_string(size_) + ", n_cells=" + std::to_string(mesh_->n_cells()) +
                      ")");
  }

  const Eigen::MatrixXd raw = raw_samples(0);
  const Eigen::VectorXd weight = kTwoPi * mesh_->w().cwiseProduct(mesh_->r());
  const Eigen::MatrixXd raw_gram = raw * weight.asDiagonal() * raw.transpose();
  transform_ = orthonormalize(raw_gram);

  const Eigen::MatrixXd tt = transform_.transpose();
  psi_ = tt * raw;
  dpsi_ = tt * raw_samples(1);
  if (smooth()) d2psi_ = tt * raw_samples(2);
}

double BasisSet::raw_value(int k, double r) const {
  if (kind_ == BasisKind::kSpectralSine) {
    return std::sin((k + 1) * std::numbers::pi * r / R());
  }
  const double h = mesh_->h();
  const double center = (k + 1) * h;
  const double d = std::abs(r - center);
  return d >= h ? 0.0 : 1.0 - d / h;
}

double BasisSet::raw_derivative(int k, double r) const {
  if (kind_ == BasisKind::kSpectralSine) {
    const double freq = (k + 1) * std::numbers::pi / R();
    return freq * std::cos(freq * r);
  }
  const double h = mesh_->h();
  const double center = (k + 1) * h;
  if (r <= center - h || r >= center + h) return 0.0;
  return r < center ? 1.0 / h : -1.0 / h;
}

double BasisSet::raw_second_derivative(int k, double r) const {
  if (kind_ != BasisKind::kSpectralSine) {
    throw UnsupportedBasis("hat basis has no pointwise second derivative");
  }
  const double freq = (k + 1) * std::numbers::pi / R();
  return -freq * freq * std::sin(freq * r);
}

double BasisSet::value(int j, double r) const {
  double s = 0.0;
  for (int k = 0; k < size_; ++k) s += transform_(k, j) * raw_value(k, r);
  return s;
}

Eigen::MatrixXd BasisSet::raw_samples(int derivative) const {
  const Eigen::VectorXd& r = mesh_->r();
  Eigen::MatrixXd out(size_, r.size());
  for (int k = 0; k < size_; ++k) {
    for (Eigen::Index q = 0; q < r.size(); ++q) {
      switch (derivative) {
        case 0:
          out(k, q) = raw_value(k, r[q]);
          break;
        case 1:
          out(k, q) = raw_derivative(k, r[q]);
          break;
        default:
          out(k, q) = raw_second_derivative(k, r[q]);
      }
    }
  }
  return out;
}

Eigen::MatrixXd BasisSet::gram() const {
  const Eigen::VectorXd weight = kTwoPi * mesh_->w().cwiseProduct(mesh_->r());
  return psi_ * weight.asDiagonal() * psi_.transpose();
}

BasisPtr build_basis(BasisKind kind, int size, MeshPtr mesh) {
  return std::make_shared<const BasisSet>(kind, size, std::move(mesh));
}

BasisPtr build_basis(BasisKind kind, int size, double R, int cells) {
  if (size < 2) throw ConfigError("build_basis: need at least 2 basis functions");
  if (cells == 0) cells = kind == BasisKind::kHatP1 ? size + 1 : kDefaultSpectralCells;
  return build_basis(kind, size, make_mesh(R, cells));
}

Eigen::MatrixXd orthonormalize(const Eigen::MatrixXd& gram) {
  if (gram.rows() != gram.cols() || gram.rows() == 0) {
    throw NumericalError("orthonormalize: Gram matrix must be square and nonempty");
  }
  const double scale = gram.cwiseAbs().maxCoeff();
  if ((gram - gram.transpose()).cwiseAbs().maxCoeff() > 1e-12 * scale) {
    throw NumericalError("orthonormalize: Gram matrix is not symmetric");
  }
  Eigen::LLT<Eigen::MatrixXd> llt(gram);
  if (llt.info() != Eigen::Success) {
    throw NumericalError("orthonormalize: Gram matrix is not positive definite");
  }
  const Eigen::MatrixXd lower = llt.matrixL();
  const double min_pivot = lower.diagonal().minCoeff();
  if (!(min_pivot > 1e-7 * std::sqrt(scale))) {
    throw NumericalError("orthonormalize: raw functions are numerically dependent");
  }
  // T = L^{-T}
  return lower.transpose().triangularView<Eigen::Upper>().solve(
      Eigen::MatrixXd::Identity(gram.rows(), gram.cols()));
}

Eigen::VectorXd project(const Eigen::Ref<const Eigen::VectorXd>& samples, const BasisSet& basis) {
  const Mesh& mesh = basis.mesh();
  if (samples.size() != mesh.size()) {
    throw DimensionError("project: sample count does not match quadrature nodes");
  }
  const Eigen::VectorXd weighted = kTwoPi * mesh.w().cwiseProduct(mesh.r()).cwiseProduct(samples);
  return basis.values() * weighted;
}

}  // namespace vortex
