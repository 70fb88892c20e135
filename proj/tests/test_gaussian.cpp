#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <stdexcept>

#include "gpc/gaussian.hpp"

using namespace gpc;

namespace {

struct CdfCase {
  double x;
  double expected;
};

// Reference values from a 40-digit evaluation of 0.5 erfc(-x/sqrt 2).
constexpr CdfCase kCdf[] = {
    {-8.0, 6.2209605742717841235e-16}, {-3.0, 0.0013498980316300945267}, {-1.0, 0.15865525393145705141},
    {0.0, 0.5},                        {0.5, 0.69146246127401310364},    {1.0, 0.84134474606854294859},
    {2.5, 0.99379033467422386483},     {6.0, 0.99999999901341235496},
};

struct QuantileCase {
  double p;
  double alpha;
  double profile;
};

constexpr QuantileCase kQuantile[] = {
    // References evaluated at the binary64 value of p, which matters in the far tails.
    {1e-12, -7.0344838253011319326, 7.1714024737143562832e-12},
    {1e-6, -4.7534243088228989573, 4.948332716562023755e-6},
    {0.001, -3.0902323061678135354, 0.003367090077063990496},
    {0.025, -1.9599639845400542118, 0.058445069805035363719},
    {0.3, -0.52440051270804081597, 0.34769261420007375731},
    {0.5, 0.0, 0.39894228040143267794},
    {0.8, 0.8416212335729143638, 0.2799619204078082767},
    {0.975, 1.9599639845400538556, 0.058445069805035404519},
    {0.999999, 4.7534243088170877657, 4.9483327166987118448e-6},
};

}  // namespace

TEST(NormalCdf, MatchesHighPrecisionReference) {
  for (const auto& c : kCdf) {
    EXPECT_NEAR(std_normal_cdf(c.x), c.expected, 1e-15) << "x=" << c.x;
    EXPECT_NEAR(std_normal_cdf(c.x) / c.expected, 1.0, 1e-13) << "x=" << c.x;
  }
}

TEST(NormalCdf, TailAvoidsCancellation) {
  EXPECT_NEAR(std_normal_tail(10.0) / 7.6198530241605260704e-24, 1.0, 1e-12);
  EXPECT_GT(std_normal_cdf(-37.0), 0.0);
  EXPECT_EQ(std_normal_cdf(std::numeric_limits<double>::infinity()), 1.0);
  EXPECT_EQ(std_normal_cdf(-std::numeric_limits<double>::infinity()), 0.0);
}

TEST(NormalCdf, PdfAtHalf) { EXPECT_NEAR(std_normal_pdf(0.5), 0.35206532676429947777, 1e-16); }

TEST(NormalQuantile, MatchesHighPrecisionReference) {
  for (const auto& c : kQuantile) {
    EXPECT_NEAR(std_normal_quantile(c.p), c.alpha, 1e-12 * (1.0 + std::abs(c.alpha))) << "p=" << c.p;
  }
}

TEST(NormalQuantile, RoundTripsThroughCdf) {
  for (int i = 1; i < 1000; ++i) {
    const double p = i / 1000.0;
    EXPECT_NEAR(std_normal_cdf(std_normal_quantile(p)), p, 1e-12);
  }
  for (double p : {1e-300, 1e-100, 1e-20}) EXPECT_NEAR(std_normal_cdf(std_normal_quantile(p)) / p, 1.0, 1e-10);
}

TEST(NormalQuantile, IsOddAroundHalf) {
  // Exact only where 1 - p is representable.
  for (double p : {0x1p-30, 0.0078125, 0.1875, 0.4375}) EXPECT_EQ(std_normal_quantile(p), -std_normal_quantile(1.0 - p));
  for (double p : {0.01, 0.2, 0.49}) EXPECT_NEAR(std_normal_quantile(p), -std_normal_quantile(1.0 - p), 1e-14);
}

TEST(NormalQuantile, RejectsOutsideOpenInterval) {
  EXPECT_THROW(std_normal_quantile(0.0), std::domain_error);
  EXPECT_THROW(std_normal_quantile(1.0), std::domain_error);
  EXPECT_THROW(std_normal_quantile(-0.1), std::domain_error);
  EXPECT_THROW(std_normal_quantile(std::nan("")), std::domain_error);
}

TEST(IsoperimetricProfile, MatchesReference) {
  for (const auto& c : kQuantile) {
    EXPECT_NEAR(isoperimetric_profile(c.p) / c.profile, 1.0, 1e-11) << "p=" << c.p;
  }
  EXPECT_NEAR(isoperimetric_profile(0.5), kInvSqrt2Pi, 1e-16);
}

TEST(IsoperimetricProfile, EndpointsAndClamping) {
  EXPECT_EQ(isoperimetric_profile(0.0), 0.0);
  EXPECT_EQ(isoperimetric_profile(1.0), 0.0);
  EXPECT_EQ(isoperimetric_profile(1e-16), 0.0);
  const IsoperimetricProfile wide(1e-3);
  EXPECT_EQ(wide(5e-4), 0.0);
  EXPECT_GT(wide(2e-3), 0.0);
  EXPECT_THROW(isoperimetric_profile(-1e-9), std::domain_error);
  EXPECT_THROW(isoperimetric_profile(1.5), std::domain_error);
}

TEST(IsoperimetricProfile, SymmetricAndConcave) {
  for (int i = 1; i < 200; ++i) {
    const double p = i / 200.0;
    EXPECT_NEAR(isoperimetric_profile(p), isoperimetric_profile(1.0 - p), 1e-14);
    const double h = 1e-3;
    if (p - h > 0.0 && p + h < 1.0) {
      const double second =
          isoperimetric_profile(p + h) - 2.0 * isoperimetric_profile(p) + isoperimetric_profile(p - h);
      EXPECT_LT(second, 0.0);
    }
  }
}

TEST(IsoperimetricProfile, DerivativesMatchFiniteDifferences) {
  for (double p : {0.05, 0.3, 0.5, 0.77, 0.95}) {
    const auto [d1, d2] = isoperimetric_profile_derivatives(p);
    EXPECT_NEAR(d1, -std_normal_quantile(p), 1e-14);
    const double h = 1e-5;
    EXPECT_NEAR(d1, (isoperimetric_profile(p + h) - isoperimetric_profile(p - h)) / (2 * h), 1e-7);
    EXPECT_NEAR(d2 * isoperimetric_profile(p), -1.0, 1e-12);
  }
  EXPECT_THROW(isoperimetric_profile_derivatives(0.0), std::domain_error);
}
