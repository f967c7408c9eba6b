#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "coophunt/model.hpp"

using namespace coophunt;

TEST(Nondimensionalize, IdentityChoice) {
  const double c = 2, d = 3, e = 5;
  auto p = nondimensionalize({d, std::sqrt(d / (c * e)), c, d, e, 0.0, c / d});
  EXPECT_DOUBLE_EQ(p.alpha, 0);
  EXPECT_NEAR(p.sigma, 1, 1e-15);
  EXPECT_NEAR(p.kappa, 1, 1e-15);
  EXPECT_NEAR(p.h, 1, 1e-15);
}

TEST(Nondimensionalize, DirectSubstitution) {
  auto p = nondimensionalize({2, 1, 1, 1, 1, 1, 0.5});
  EXPECT_DOUBLE_EQ(p.alpha, 1);
  EXPECT_DOUBLE_EQ(p.sigma, 2);
  EXPECT_DOUBLE_EQ(p.kappa, 1);
  EXPECT_DOUBLE_EQ(p.h, 0.5);
}

TEST(Nondimensionalize, RejectsNonpositive) {
  EXPECT_THROW(nondimensionalize({0, 1, 1, 1, 1, 1, 1}), std::domain_error);
  EXPECT_THROW(nondimensionalize({1, 1, 1, -1, 1, 1, 1}), std::domain_error);
}

TEST(Field3, KnownZeros) {
  param_set p{6, 1.2, 1, 0.5};
  for (state s : {state{0, 0}, state{1.2, 0}, state{1, 1.0 / 6}}) {
    auto f = field3(p, s);
    EXPECT_NEAR(f[0], 0, 1e-14);
    EXPECT_NEAR(f[1], 0, 1e-14);
  }
}

TEST(Field2, PreyFreeAxis) {
  param_set p{3, 2, 0.7, 0.4};
  auto f = field2(p, {0, 1.3});
  EXPECT_DOUBLE_EQ(f[0], 0);
  EXPECT_DOUBLE_EQ(f[1], -1.3);
}

TEST(Jacobian3, DeterminantAtOrigin) {
  param_set p{2, 1.7, 0.4, 0.3};
  EXPECT_NEAR(jacobian3(p, {0, 0}).det(), -p.sigma * p.kappa * p.kappa, 1e-14);
}

TEST(Jacobian3, DeterminantAtBoundary) {
  param_set p{7, 1.2, 0.3, 0.5};
  const double k = p.kappa, h = p.h, s = p.sigma;
  const double printed = s * k * k * (h * k * k + 1) * (k * k * (h - 1) + 1);
  EXPECT_NEAR(printed, 0.3 * 1.44 * 1.72 * 0.28, 1e-14);
  EXPECT_NEAR(jacobian3(p, {k, 0}).det(), printed, 1e-12);
}

class ModelProperty : public ::testing::Test {
 protected:
  std::mt19937_64 rng{20240917};
  param_set draw_params() {
    std::uniform_real_distribution<double> u(0.1, 10);
    return {u(rng), u(rng), u(rng), u(rng)};
  }
  state draw_state() {
    std::uniform_real_distribution<double> u(0.01, 5);
    return {u(rng), u(rng)};
  }
};

TEST_F(ModelProperty, JacobianMatchesCentralDifferences) {
  for (int n = 0; n < 1000; ++n) {
    auto p = draw_params();
    auto s = draw_state();
    auto j = jacobian3(p, s);
    const double ex = 1e-6 * std::max(1.0, s.x), ey = 1e-6 * std::max(1.0, s.y);
    auto fxp = field3(p, {s.x + ex, s.y}), fxm = field3(p, {s.x - ex, s.y});
    auto fyp = field3(p, {s.x, s.y + ey}), fym = field3(p, {s.x, s.y - ey});
    const double fd[4] = {(fxp[0] - fxm[0]) / (2 * ex), (fyp[0] - fym[0]) / (2 * ey), (fxp[1] - fxm[1]) / (2 * ex),
                          (fyp[1] - fym[1]) / (2 * ey)};
    const double an[4] = {j.a11, j.a12, j.a21, j.a22};
    double scale = 0;
    for (double v : an) scale = std::max(scale, std::abs(v));
    for (int k = 0; k < 4; ++k) EXPECT_NEAR(an[k], fd[k], 1e-6 * std::max(std::abs(an[k]), 1e-3 * scale)) << k;
  }
}

TEST_F(ModelProperty, AxesAreInvariant) {
  for (int n = 0; n < 200; ++n) {
    auto p = draw_params();
    auto s = draw_state();
    EXPECT_EQ(field3(p, {0, s.y})[0], 0);
    EXPECT_EQ(field3(p, {s.x, 0})[1], 0);
  }
}

TEST_F(ModelProperty, OrbitalEquivalence) {
  for (int n = 0; n < 1000; ++n) {
    auto p = draw_params();
    auto s = draw_state();
    auto f2 = field2(p, s);
    auto f3 = field3(p, s);
    const double g = orbital_factor(p, s);
    ASSERT_GT(g, 0);
    for (int k = 0; k < 2; ++k) EXPECT_NEAR(f3[k], g * f2[k], 1e-11 * (std::abs(f3[k]) + g * std::abs(f2[k]) + 1e-300));
  }
}

TEST_F(ModelProperty, NoCooperationIsClassicalHollingIII) {
  for (int n = 0; n < 200; ++n) {
    auto p = draw_params();
    p.alpha = 0;
    auto s = draw_state();
    const double uptake = s.x * s.x * s.y / (1 + p.h * s.x * s.x);
    auto f = field2(p, s);
    EXPECT_NEAR(f[0], p.sigma * s.x * (1 - s.x / p.kappa) - uptake, 1e-12 * (1 + std::abs(f[0])));
    EXPECT_NEAR(f[1], uptake - s.y, 1e-12 * (1 + std::abs(f[1])));
  }
}
