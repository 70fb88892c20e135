#include <gtest/gtest.h>

#include <cmath>
#include <stdexcept>

#include "gpc/ehrhard.hpp"
#include "gpc/gaussian.hpp"
#include "gpc/random.hpp"
#include "gpc/relaxed.hpp"

using namespace gpc;

TEST(RelaxedEnergy, ConstantHalfIsTheHalfSpacePerimeter) {
  const auto g = build_grid(1, 6, 2048);
  EXPECT_NEAR(relaxed_energy(ScalarField(g, 0.5)), kInvSqrt2Pi, 1e-8);
  EXPECT_EQ(relaxed_energy(ScalarField(g, 0.0)), 0.0);
}

TEST(RelaxedEnergy, ExtendsTheTotalVariationOfIndicators) {
  const auto g = build_grid(2, 6, 128);
  Xoshiro256 rng(2);
  const auto E = random_smooth_set(rng, g);
  EXPECT_EQ(relaxed_energy(E), total_variation_gamma(E));
}

TEST(RelaxedEnergy, InfiniteOutsideTheUnitInterval) {
  const auto g = build_grid(1, 6, 64);
  ScalarField u(g, 0.5);
  u[10] = 1.2;
  EXPECT_EQ(relaxed_energy(u), kInfiniteEnergy);
  EXPECT_THROW(prescribed_curvature_energy(u, ScalarField(g)), std::invalid_argument);
}

TEST(Duality, ZeroPairAndFeasibility) {
  const auto g = build_grid(1, 6, 256);
  const auto u = sample(g, [](const Point& x) { return std_normal_cdf(x[0]); });
  DualTestPair p = DualTestPair::zero(g);
  EXPECT_EQ(dual_pairing(u, p), 0.0);
  p.xi[3] = 1.5;
  EXPECT_FALSE(p.feasible());
  EXPECT_THROW(dual_pairing(u, p), std::invalid_argument);
}

TEST(Duality, LowerBoundIsBelowAndCloseToTheEnergy) {
  const auto g = build_grid(1, 6, 1024);
  const auto u = sample(g, [](const Point& x) { return std_normal_cdf(2.0 * x[0]); });
  const DualityResult d = duality_lower_bound(u, 200);
  const double F = relaxed_energy(u);
  EXPECT_LE(d.value, F + 1e-12);
  EXPECT_GT(d.value, 0.95 * F);
  EXPECT_TRUE(d.pair.feasible());
  for (std::size_t i = 1; i < d.history.size(); ++i) EXPECT_GE(d.history[i], d.history[i - 1]);
  EXPECT_NEAR(dual_pairing(u, d.pair), d.value, 1e-14);
}

TEST(Deficit, HalfSpaceAttainsTheProfile) {
  const auto g = build_grid(1, 6, 2048);
  const double h[1] = {1.0};
  EXPECT_NEAR(isoperimetric_deficit(half_space_indicator(h, 0.3, g)), 0.0, 2e-3);
  EXPECT_THROW(isoperimetric_deficit(ScalarField(g, 2.0)), std::invalid_argument);
}

TEST(Curvature, EnergyOnHalfSpaces) {
  // u = chi_{x1 < c}, g = lambda: phi(c) + lambda Phi(c).
  const auto g = build_grid(1, 6, 2048);
  const double h[1] = {1.0};
  for (double c : {-0.5, 0.0, 0.8}) {
    const auto E = half_space_indicator(h, c, g);
    const double expected = std_normal_pdf(c) + 0.3 * std_normal_cdf(c);
    EXPECT_NEAR(prescribed_curvature_energy(E, ScalarField(g, 0.3)), expected, 2e-3);
  }
  const auto u = sample(g, [](const Point& x) { return std_normal_cdf(x[0]); });
  EXPECT_EQ(prescribed_curvature_energy(u, ScalarField(g, 0.0)), relaxed_energy(u));
  EXPECT_EQ(prescribed_curvature_energy(ScalarField(g, 0.0), u), 0.0);
}

TEST(Curvature, ZeroStepsReturnTheInitializer) {
  const auto g = build_grid(1, 6, 64);
  CurvatureOptions o;
  o.init = sample(g, [](const Point& x) { return std_normal_cdf(x[0]); });
  const CurvatureResult r = minimize_prescribed_curvature(ScalarField(g, 0.0), 0, o);
  EXPECT_EQ(r.u.values, o.init->values);
  EXPECT_EQ(r.accepted_steps, 0);
}

TEST(Curvature, ZeroForcingReachesZeroEnergy) {
  const auto g = build_grid(1, 6, 256);
  const CurvatureResult r = minimize_prescribed_curvature(ScalarField(g, 0.0), 4000);
  EXPECT_LE(prescribed_curvature_energy(r.u, ScalarField(g, 0.0)), 1e-3);
  for (std::size_t i = 1; i < r.energies.size(); ++i) EXPECT_LE(r.energies[i], r.energies[i - 1]);
}

TEST(Curvature, LinearForcingSelectsTheHalfSpace) {
  // g = 2 x1: over half-spaces {x1 < c} the energy is -phi(c), minimal at c = 0.
  const auto g = build_grid(1, 6, 256);
  const auto forcing = sample(g, [](const Point& x) { return 2.0 * x[0]; });
  const CurvatureResult r = minimize_prescribed_curvature(forcing, 12000);
  EXPECT_NEAR(prescribed_curvature_energy(r.u, forcing), -kInvSqrt2Pi, 0.05 * kInvSqrt2Pi);
  const double h[1] = {1.0};
  EXPECT_LT(l2_distance(r.u, half_space_indicator(h, 0.0, g)), 0.3);
  for (std::size_t i = 1; i < r.energies.size(); ++i) EXPECT_LE(r.energies[i], r.energies[i - 1]);
}

TEST(Curvature, ConditionalExpectationDoesNotIncreaseTheEnergy) {
  const auto g = build_grid(2, 6, 256);
  Xoshiro256 rng(9);
  for (int i = 0; i < 3; ++i) {
    const auto u = random_smooth_field(rng, g);
    const auto e = conditional_expectation(u, 1);
    // Lift E_1 u back to the two-dimensional grid.
    ScalarField lifted(g);
    for (std::size_t j = 0; j < g->size(); ++j) lifted[j] = e[static_cast<std::size_t>(g->axis_index(j, 0))];
    EXPECT_LE(relaxed_energy(lifted), relaxed_energy(u) + 0.01);
  }
}
