#pragma once

// Scalar calculus of the one-dimensional standard Gaussian: density, CDF,
// quantile and the Gaussian isoperimetric profile U = phi o Phi^{-1}.

#include <utility>

namespace gpc {

inline constexpr double kInvSqrt2Pi = 0.39894228040143267794;
inline constexpr double kSqrt2Pi = 2.50662827463100050242;

/// Standard normal density phi(x).
double std_normal_pdf(double x);

/// Standard normal CDF Phi(x), absolute error below 1e-14. Stays positive
/// (subnormal) down to x ~ -38.
double std_normal_cdf(double x);

/// Upper tail 1 - Phi(x) without cancellation.
double std_normal_tail(double x);

/// Inverse CDF alpha(p) for p in (0,1); throws std::domain_error otherwise.
/// Rational initial guess followed by two Newton steps on Phi, so that
/// |Phi(alpha(p)) - p| <= 1e-12.
double std_normal_quantile(double p);

/// The Gaussian isoperimetric profile U(p) = phi(alpha(p)): the perimeter of
/// a half-space of Gaussian volume p.
///
/// Inputs within `clamp_eps` of 0 or 1 evaluate to exactly 0 (the limit
/// value); inputs outside [0,1] throw std::domain_error.
class IsoperimetricProfile {
 public:
  static constexpr double kDefaultClampEps = 1e-15;

  explicit IsoperimetricProfile(double clamp_eps = kDefaultClampEps);

  double operator()(double p) const;

  /// (U'(p), U''(p)) = (-alpha(p), -1/U(p)); p must lie in (0,1).
  std::pair<double, double> derivatives(double p) const;

  double clamp_eps() const { return clamp_eps_; }

 private:
  double clamp_eps_;
};

double isoperimetric_profile(double p);
std::pair<double, double> isoperimetric_profile_derivatives(double p);

}  // namespace gpc
