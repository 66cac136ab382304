#include <cmath>

#include <gtest/gtest.h>

#include <vortex/quadrature.hpp>

using namespace vortex;

TEST(GaussLegendre, WeightsSumToTwoAndNodesAreSymmetric) {
  for (int p : {1, 2, 3, 4, 7}) {
    auto g = gauss_legendre(p);
    ASSERT_EQ(g.nodes.size(), static_cast<std::size_t>(p));
    double s = 0.0;
    for (int i = 0; i < p; ++i) {
      s += g.weights[i];
      EXPECT_NEAR(g.nodes[i], -g.nodes[p - 1 - i], 1e-15);
      if (i > 0) EXPECT_LT(g.nodes[i - 1], g.nodes[i]);
    }
    EXPECT_NEAR(s, 2.0, 1e-14);
  }
}

TEST(GaussLegendre, ExactForPolynomialsUpToDegreeTwoPMinusOne) {
  const int p = 4;
  auto g = gauss_legendre(p);
  for (int k = 0; k <= 2 * p - 1; ++k) {
    double s = 0.0;
    for (int i = 0; i < p; ++i) s += g.weights[i] * std::pow(g.nodes[i], k);
    const double exact = (k % 2 == 0) ? 2.0 / (k + 1) : 0.0;
    EXPECT_NEAR(s, exact, 1e-14) << "degree " << k;
  }
  double s8 = 0.0;
  for (int i = 0; i < p; ++i) s8 += g.weights[i] * std::pow(g.nodes[i], 8);
  EXPECT_GT(std::abs(s8 - 2.0 / 9.0), 1e-6);
}

TEST(Mesh, LayoutAndWeights) {
  Mesh m(8.0, 16);
  EXPECT_EQ(m.size(), 64);
  EXPECT_DOUBLE_EQ(m.h(), 0.5);
  EXPECT_EQ(m.nodes().size(), 17u);
  EXPECT_DOUBLE_EQ(m.nodes().front(), 0.0);
  EXPECT_DOUBLE_EQ(m.nodes().back(), 8.0);
  EXPECT_NEAR(m.w().sum(), 8.0, 1e-13);
  EXPECT_GT(m.r().minCoeff(), 0.0);
  EXPECT_LT(m.r().maxCoeff(), 8.0);
  for (Eigen::Index i = 1; i < m.size(); ++i) EXPECT_LT(m.r()[i - 1], m.r()[i]);
}

TEST(Mesh, IntegratesPiecewisePolynomialsExactly) {
  Mesh m(8.0, 8);
  Eigen::VectorXd f = m.r().array().pow(7);
  EXPECT_NEAR(m.integrate(f), std::pow(8.0, 8) / 8.0, 1e-6);
  Eigen::VectorXd g = m.r().unaryExpr([](double r) { return std::sin(r); });
  Mesh fine(8.0, 512);
  Eigen::VectorXd gf = fine.r().unaryExpr([](double r) { return std::sin(r); });
  EXPECT_NEAR(fine.integrate(gf), 1.0 - std::cos(8.0), 1e-13);
}

TEST(Mesh, MakeMeshSharesParameters) {
  auto m = make_mesh(3.0, 10, 3);
  EXPECT_EQ(m->n_cells(), 10);
  EXPECT_EQ(m->points_per_cell(), 3);
  EXPECT_EQ(m->size(), 30);
}
