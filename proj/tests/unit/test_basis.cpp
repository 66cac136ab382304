#include <cmath>
#include <numbers>
#include <random>

#include <gtest/gtest.h>

#include <vortex/basis.hpp>
#include <vortex/errors.hpp>
#include <vortex/field.hpp>
#include <vortex/model.hpp>

using namespace vortex;

namespace {

Eigen::VectorXd random_vector(int n, std::mt19937& rng) {
  std::normal_distribution<double> d;
  Eigen::VectorXd v(n);
  for (int i = 0; i < n; ++i) v[i] = d(rng);
  return v;
}

}  // namespace

class BasisKinds : public ::testing::TestWithParam<BasisKind> {};

TEST_P(BasisKinds, OrthonormalUpTo64) {
  for (int N : {2, 8, 20, 40, 64}) {
    auto b = build_basis(GetParam(), N, 8.0);
    const double err = (b->gram() - Eigen::MatrixXd::Identity(N, N)).cwiseAbs().maxCoeff();
    EXPECT_LE(err, 1e-10) << to_string(GetParam()) << " N=" << N;
  }
}

TEST_P(BasisKinds, VanishesAtCoreAndOuterRadius) {
  auto b = build_basis(GetParam(), 12, 8.0);
  for (int j = 0; j < b->size(); ++j) {
    EXPECT_NEAR(b->value(j, 0.0), 0.0, 1e-12);
    EXPECT_NEAR(b->value(j, 8.0), 0.0, 1e-10);
  }
}

TEST_P(BasisKinds, ParsevalAndProjectionRoundTrip) {
  std::mt19937 rng(7);
  auto b = build_basis(GetParam(), 24, 8.0);
  for (int trial = 0; trial < 5; ++trial) {
    Eigen::VectorXd a = random_vector(24, rng);
    auto u = synthesize(a, b);
    EXPECT_NEAR(energy_flux(u), a.squaredNorm(), 1e-10 * a.squaredNorm());
    EXPECT_LE((project(u.u(), *b) - a).cwiseAbs().maxCoeff(), 1e-10);
  }
}

TEST_P(BasisKinds, PointEvaluationAgreesWithCachedSamples) {
  auto b = build_basis(GetParam(), 10, 8.0);
  const auto& r = b->mesh().r();
  for (int j : {0, 4, 9}) {
    for (Eigen::Index q : {Eigen::Index(0), r.size() / 3, r.size() - 1}) {
      EXPECT_NEAR(b->value(j, r[q]), b->values()(j, q), 1e-12);
    }
  }
}

INSTANTIATE_TEST_SUITE_P(Both, BasisKinds,
                         ::testing::Values(BasisKind::kSpectralSine, BasisKind::kHatP1));

TEST(Basis, SineSecondDerivativeMatchesRawFamily) {
  auto b = build_basis(BasisKind::kSpectralSine, 6, 8.0);
  const double r = 2.7;
  for (int k = 0; k < 6; ++k) {
    const double w = (k + 1) * std::numbers::pi / 8.0;
    EXPECT_NEAR(b->raw_value(k, r), std::sin(w * r), 1e-14);
    EXPECT_NEAR(b->raw_derivative(k, r), w * std::cos(w * r), 1e-13);
    EXPECT_NEAR(b->raw_second_derivative(k, r), -w * w * std::sin(w * r), 1e-12);
  }
  EXPECT_EQ(b->second_derivatives().rows(), 6);
}

TEST(Basis, SineProjectionErrorShrinksWithRefinement) {
  auto mesh = make_mesh(8.0, 512);
  Eigen::VectorXd f = mesh->r().unaryExpr([](double r) { return r * std::exp(-0.4 * r) * (8.0 - r); });
  const double total = 2.0 * std::numbers::pi * mesh->integrate(mesh->r().cwiseProduct(f.cwiseAbs2()));
  double prev = total;
  for (int N : {2, 4, 8, 16, 32}) {
    auto b = build_basis(BasisKind::kSpectralSine, N, mesh);
    const double err = total - project(f, *b).squaredNorm();
    EXPECT_LE(err, prev + 1e-12) << "N=" << N;
    EXPECT_GE(err, -1e-10);
    prev = err;
  }
  EXPECT_LT(prev, 1e-4 * total);
}

TEST(Basis, KindNamesRoundTrip) {
  EXPECT_EQ(basis_kind_from_string("sine"), BasisKind::kSpectralSine);
  EXPECT_EQ(basis_kind_from_string("hat"), BasisKind::kHatP1);
  EXPECT_EQ(basis_kind_from_string(to_string(BasisKind::kHatP1)), BasisKind::kHatP1);
  EXPECT_THROW(basis_kind_from_string("legendre"), ConfigError);
}

TEST(Basis, RejectsInconsistentSizes) {
  EXPECT_THROW(build_basis(BasisKind::kHatP1, 10, make_mesh(8.0, 20)), ConfigError);
  EXPECT_THROW(build_basis(BasisKind::kSpectralSine, 1, 8.0), ConfigError);
  auto b = build_basis(BasisKind::kSpectralSine, 5, 8.0);
  EXPECT_THROW(synthesize(Eigen::VectorXd::Ones(4), b), DimensionError);
  EXPECT_THROW(project(Eigen::VectorXd::Ones(3), *b), DimensionError);
}

TEST(Basis, HatsHaveNoPointwiseSecondDerivative) {
  auto b = build_basis(BasisKind::kHatP1, 7, 8.0);
  EXPECT_FALSE(b->smooth());
  EXPECT_THROW(b->raw_second_derivative(0, 1.0), UnsupportedBasis);
  auto u = synthesize(Eigen::VectorXd::Ones(7), b);
  EXPECT_FALSE(u.has_second_derivative());
  EXPECT_THROW(u.d2u(), UnsupportedBasis);
}

TEST(Orthonormalize, IdentityAndDiagonal) {
  Eigen::MatrixXd I = Eigen::MatrixXd::Identity(4, 4);
  EXPECT_LE((orthonormalize(I) - I).cwiseAbs().maxCoeff(), 1e-15);
  Eigen::MatrixXd D = Eigen::Vector3d(4.0, 9.0, 0.25).asDiagonal();
  Eigen::MatrixXd T = orthonormalize(D);
  EXPECT_NEAR(T(0, 0), 0.5, 1e-15);
  EXPECT_NEAR(T(1, 1), 1.0 / 3.0, 1e-15);
  EXPECT_NEAR(T(2, 2), 2.0, 1e-15);
}

TEST(Orthonormalize, SatisfiesTransposeGramIdentity) {
  std::mt19937 rng(3);
  Eigen::MatrixXd A(6, 6);
  std::normal_distribution<double> d;
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) A(i, j) = d(rng);
  Eigen::MatrixXd G = A.transpose() * A + 0.1 * Eigen::MatrixXd::Identity(6, 6);
  Eigen::MatrixXd T = orthonormalize(G);
  EXPECT_LE((T.transpose() * G * T - Eigen::MatrixXd::Identity(6, 6)).cwiseAbs().maxCoeff(), 1e-12);
}

TEST(Orthonormalize, RejectsBadGram) {
  Eigen::Matrix2d asym;
  asym << 1.0, 0.5, 0.0, 1.0;
  EXPECT_THROW(orthonormalize(asym), NumericalError);
  Eigen::Matrix2d indefinite;
  indefinite << 1.0, 2.0, 2.0, 1.0;
  EXPECT_THROW(orthonormalize(indefinite), NumericalError);
  Eigen::Matrix2d singular;
  singular << 1.0, 1.0, 1.0, 1.0;
  EXPECT_THROW(orthonormalize(singular), NumericalError);
}

TEST(Field, ScaledAndSampled) {
  auto b = build_basis(BasisKind::kSpectralSine, 8, 8.0);
  Eigen::VectorXd a = Eigen::VectorXd::LinSpaced(8, 1.0, 0.1);
  auto u = synthesize(a, b);
  auto v = u.scaled(-2.0);
  EXPECT_LE((v.u() + 2.0 * u.u()).cwiseAbs().maxCoeff(), 1e-14);
  EXPECT_NEAR(v.value_at(3.0), -2.0 * u.value_at(3.0), 1e-13);
  auto s = sample_field(b->mesh_ptr(), [](double r) { return r; }, [](double) { return 1.0; });
  EXPECT_EQ(s.basis(), nullptr);
  EXPECT_THROW(s.value_at(1.0), ConfigError);
}
