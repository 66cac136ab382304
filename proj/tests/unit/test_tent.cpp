#include <cmath>

#include <gtest/gtest.h>

#include <vortex/errors.hpp>
#include <vortex/model.hpp>
#include <vortex/tent.hpp>

using namespace vortex;

namespace {
const Params kP{0.1, 1, 8.0};
}

class TentAmplitudes : public ::testing::TestWithParam<double> {};

TEST_P(TentAmplitudes, ClosedFormsMatchQuadrature) {
  const double b = GetParam();
  auto t = TentProfile::for_params(kP, b);
  auto ci = tent_integrals(t, kP);
  auto qi = integrate_terms(sample_tent(t, make_mesh(8.0, 512)), kP);
  auto close = [](double x, double y) { return std::abs(x - y) <= 1e-10 * std::max(1.0, std::abs(y)); };
  EXPECT_PRED2(close, ci.flux_moment, qi.flux_moment);
  EXPECT_PRED2(close, ci.kinetic, qi.kinetic);
  EXPECT_PRED2(close, ci.centrifugal, qi.centrifugal);
  EXPECT_PRED2(close, ci.log_term, qi.log_term);
}

INSTANTIATE_TEST_SUITE_P(Amplitudes, TentAmplitudes, ::testing::Values(0.1, 1.0, 10.0));

// Log integral references from 30-digit adaptive quadrature.
TEST(Tent, LogIntegralMatchesHighPrecisionReference) {
  const double expected[] = {0.0106634681895878830, 1.03610702352330748, 38.3247130531168902};
  const double bs[] = {0.1, 1.0, 10.0};
  for (int i = 0; i < 3; ++i) {
    auto ci = tent_integrals(TentProfile::for_params(kP, bs[i]), kP);
    EXPECT_NEAR(ci.log_term, expected[i], 1e-13 * expected[i]);
  }
  auto ci = tent_integrals(TentProfile::for_params(kP, 1.0), kP);
  EXPECT_NEAR(ci.flux_moment, 32.0 / 3.0, 1e-14);
  EXPECT_NEAR(ci.kinetic, 2.0, 1e-15);
  EXPECT_NEAR(ci.centrifugal, 2.0 * (2.0 * std::log(2.0) - 1.0), 1e-15);
}

TEST(Tent, SmallSaturationExpansion) {
  const double alpha = 1e-4;
  Params p{alpha, 1, 8.0};
  auto t = TentProfile::for_params(p, 1.0);
  auto ci = tent_integrals(t, p);
  const double r_u4 = 6.4;  // \int r u0^4 for a = 4, b = 1
  EXPECT_NEAR(ci.log_term, alpha * ci.flux_moment - 0.5 * alpha * alpha * r_u4, 1e-11);
}

TEST(Tent, ActionMatchesSampledField) {
  for (double b : {0.1, 1.0, 4.0}) {
    auto t = TentProfile::for_params(kP, b);
    auto u = sample_tent(t, make_mesh(8.0, 512));
    for (double kappa : {0.0, 0.5}) {
      const double ref = action_I_kappa(u, kP, kappa).value;
      EXPECT_NEAR(tent_action(t, kP, kappa), ref, 1e-10 * std::max(1.0, std::abs(ref)));
    }
    EXPECT_NEAR(tent_gamma_infinity(t, kP, 0.3), gamma_infinity(u, kP, 0.3), 1e-10);
  }
  EXPECT_NEAR(tent_action(TentProfile::for_params(kP, 1.0), kP), -1.66966995321602787, 1e-12);
}

TEST(Tent, FluxPrescription) {
  auto t = TentProfile::with_flux(kP, 40.0);
  EXPECT_DOUBLE_EQ(t.a_half, 4.0);
  EXPECT_NEAR(t.b * t.b, 3.0 * 40.0 / (M_PI * 64.0), 1e-15);
  EXPECT_THROW(TentProfile::with_flux(kP, -1.0), DomainError);
}

TEST(Tent, ShapeAndDerivative) {
  TentProfile t{4.0, 2.0};
  EXPECT_DOUBLE_EQ(t.value(0.0), 0.0);
  EXPECT_DOUBLE_EQ(t.value(4.0), 2.0);
  EXPECT_DOUBLE_EQ(t.value(8.0), 0.0);
  EXPECT_DOUBLE_EQ(t.value(2.0), 1.0);
  EXPECT_DOUBLE_EQ(t.derivative(1.0), 0.5);
  EXPECT_DOUBLE_EQ(t.derivative(6.0), -0.5);
}

TEST(Tent, WrongHalfWidthIsRejected) {
  EXPECT_THROW(tent_integrals(TentProfile{3.0, 1.0}, kP), DomainError);
}

// References from a 30-digit evaluation of ln(1+x) - 2 + 2 atan(sqrt x)/sqrt x.
TEST(Tent, LogBracket) {
  EXPECT_NEAR(tent_log_bracket(1e-6), 3.33333233333380952e-7, 1e-20);
  EXPECT_NEAR(tent_log_bracket(0.01), 0.00332338067640863042, 1e-17);
  EXPECT_NEAR(tent_log_bracket(0.5), 0.146304610842370777, 1e-15);
  EXPECT_NEAR(tent_log_bracket(3.0), 0.595493937276035853, 1e-15);
  EXPECT_EQ(tent_log_bracket(0.0), 0.0);
  for (double x : {1e-8, 0.05, 0.09, 0.11, 2.0})
    EXPECT_NEAR(tent_log_bracket_remainder(x), tent_log_bracket(x) - x / 3.0, 1e-15 * std::max(1.0, x));
  EXPECT_NEAR(tent_log_bracket_remainder(1e-4), -1e-8 / 10.0, 1e-13);
  EXPECT_THROW(tent_log_bracket(-1.0), DomainError);
}
