#include <gtest/gtest.h>

#include <cmath>
#include <stdexcept>

#include "gpc/ehrhard.hpp"
#include "gpc/gaussian.hpp"
#include "gpc/random.hpp"

using namespace gpc;

TEST(ConditionalExpectation, KeepsLeadingVariablesAndAveragesTheRest) {
  const auto g = build_grid(2, 6, 128);
  const auto u = sample(g, [](const Point& x) { return std::sin(x[0]) + x[1] * x[1]; });
  const auto e = conditional_expectation(u, 1);
  ASSERT_EQ(e.grid->dim(), 1);
  for (std::size_t i = 0; i < e.size(); i += 7) EXPECT_NEAR(e[i], std::sin(e.grid->coord(i, 0)) + 1.0, 1e-6);
  // The average is normalized by the truncated mass of the trailing axis.
  EXPECT_NEAR(integrate(e) * e.grid->total_weight(), integrate(u), 1e-12);
  EXPECT_THROW(conditional_expectation(u, 0), std::invalid_argument);
  EXPECT_THROW(conditional_expectation(u, 2), std::invalid_argument);
}

TEST(FillHalfLine, FillsExactFraction) {
  const std::vector<double> w{0.1, 0.2, 0.3, 0.4};
  auto f = fill_half_line(w, 0.0);
  for (double v : f) EXPECT_EQ(v, 0.0);
  f = fill_half_line(w, 1.0);
  for (double v : f) EXPECT_EQ(v, 1.0);
  f = fill_half_line(w, 0.45);
  EXPECT_EQ(f[0], 1.0);
  EXPECT_EQ(f[1], 1.0);
  EXPECT_NEAR(f[2], 0.5, 1e-15);
  EXPECT_EQ(f[3], 0.0);
}

TEST(EhrhardSet, SlicesHaveTheRequestedVolume) {
  const auto g = build_grid(1, 6, 256);
  const auto v = sample(g, [](const Point& x) { return std_normal_cdf(std::sin(x[0])); });
  const auto E = ehrhard_set(v);
  ASSERT_EQ(E.grid->dim(), 2);
  const auto back = conditional_expectation(E, 1);
  for (std::size_t i = 0; i < back.size(); ++i) EXPECT_NEAR(back[i], v[i], 1e-12);
}

TEST(EhrhardSet, PerimeterFormula) {
  // P(ES_1(v)) = int sqrt(U(v)^2 + v'^2) dgamma_1.
  const auto g2 = build_grid(2, 6, 512);
  const auto g1 = g2->with_dim(1);
  const auto v = sample(g1, [](const Point& x) { return std_normal_cdf(0.7 * x[0] + 0.3); });
  double expected = 0.0;
  for (std::size_t i = 0; i < g1->size(); ++i) {
    const double x = g1->coord(i, 0);
    const double dv = 0.7 * std_normal_pdf(0.7 * x + 0.3);
    expected += g1->weight(i) * std::hypot(isoperimetric_profile(v[i]), dv);
  }
  const double P = perimeter_gamma(ehrhard_set(v, g2));
  EXPECT_NEAR(P / expected, 1.0, 0.01);
  // Phi(0.7 x + 0.3) gives the half-space {y < 0.7 x + 0.3}.
  EXPECT_NEAR(expected, half_space_perimeter_exact(0.3, std::hypot(0.7, 1.0)), 1e-6);
}

TEST(SymmetrizeSet, PreservesVolumeAndDecreasesPerimeter) {
  const auto g = build_grid(2, 6, 256);
  Xoshiro256 rng(11);
  for (int i = 0; i < 5; ++i) {
    const auto E = random_smooth_set(rng, g);
    for (int k : {1, 2}) {
      const auto S = ehrhard_symmetrize_set(E, k);
      EXPECT_NEAR(volume_gamma(S), volume_gamma(E), 1e-12);
      EXPECT_LE(perimeter_gamma(S), perimeter_gamma(E) + 0.005);
    }
  }
  EXPECT_THROW(ehrhard_symmetrize_set(ScalarField(g, 0.0), 3), std::invalid_argument);
}

TEST(SymmetrizeSet, HalfSpaceIsAFixedPoint) {
  const auto g = build_grid(2, 6, 256);
  const double h[2] = {1.0, 0.0};
  const auto E = half_space_indicator(h, 0.4, g);
  const auto S = ehrhard_symmetrize_set(E, 1);
  EXPECT_LT(l2_distance(S, E), 1e-2);
  EXPECT_NEAR(perimeter_gamma(S), perimeter_gamma(E), 1e-3);
}

TEST(SymmetrizeFunction, LevelSetVolumesAndL2) {
  const auto g = build_grid(2, 6, 256);
  Xoshiro256 rng(5);
  const auto u = random_smooth_field(rng, g);
  const auto s = ehrhard_symmetrize_function(u, 1, 512);
  ASSERT_EQ(s.levels.size(), 512u);
  for (std::size_t j = 0; j < s.levels.size(); ++j) EXPECT_NEAR(s.symmetrized_volumes[j], s.volumes[j], 1e-12);
  EXPECT_NEAR(l2_norm(s.field), l2_norm(u), 1e-3);
  EXPECT_LE(dirichlet_energy(s.field), dirichlet_energy(u) + 0.01);
  EXPECT_THROW(ehrhard_symmetrize_function(u, 1, 8), std::invalid_argument);
}
