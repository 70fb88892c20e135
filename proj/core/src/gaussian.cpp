#include "gpc/gaussian.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace gpc {

namespace {

// Acklam's rational approximation of the normal quantile, relative error
// about 1.15e-9 over (0,1).
constexpr double kA[] = {-3.969683028665376e+01, 2.209460984245205e+02,
                         -2.759285104469687e+02, 1.383577518672690e+02,
                         -3.066479806614716e+01, 2.506628277459239e+00};
constexpr double kB[] = {-5.447609879822406e+01, 1.615858368580409e+02,
                         -1.556989798598866e+02, 6.680131188771972e+01,
                         -1.328068155288572e+01};
constexpr double kC[] = {-7.784894002430293e-03, -3.223964580411365e-01,
                         -2.400758277161838e+00, -2.549732539343734e+00,
                         4.374664141464968e+00,  2.938163982698783e+00};
constexpr double kD[] = {7.784695709041462e-03, 3.224671290700398e-01,
                         2.445134137142996e+00, 3.754408661907416e+00};
constexpr double kLowTail = 0.02425;

double rational_guess(double q) {
  if (q < kLowTail) {
    const double r = std::sqrt(-2.0 * std::log(q));
    return (((((kC[0] * r + kC[1]) * r + kC[2]) * r + kC[3]) * r + kC[4]) * r + kC[5]) /
           ((((kD[0] * r + kD[1]) * r + kD[2]) * r + kD[3]) * r + 1.0);
  }
  const double s = q - 0.5;
  const double r = s * s;
  return (((((kA[0] * r + kA[1]) * r + kA[2]) * r + kA[3]) * r + kA[4]) * r + kA[5]) * s /
         (((((kB[0] * r + kB[1]) * r + kB[2]) * r + kB[3]) * r + kB[4]) * r + 1.0);
}

// Quantile for q in (0, 1/2].
double lower_quantile(double q) {
  double x = rational_guess(q);
  for (int step = 0; step < 2; ++step) {
    const double density = std_normal_pdf(x);
    if (density <= 0.0) break;
    x -= (std_normal_cdf(x) - q) / density;
  }
  return x;
}

[[noreturn]] void throw_domain(const char* what, double p) {
  throw std::domain_error(std::string(what) + ": argument " + std::to_string(p) +
                          " outside the admissible range");
}

}  // namespace

double std_normal_pdf(double x) { return kInvSqrt2Pi * std::exp(-0.5 * x * x); }

double std_normal_cdf(double x) { return 0.5 * std::erfc(-x * M_SQRT1_2); }

double std_normal_tail(double x) { return 0.5 * std::erfc(x * M_SQRT1_2); }

double std_normal_quantile(double p) {
  if (!(p > 0.0 && p < 1.0)) throw_domain("std_normal_quantile", p);
  if (p <= 0.5) return lower_quantile(p);
  return -lower_quantile(1.0 - p);  // exact subtraction for p >= 1/2
}

IsoperimetricProfile::IsoperimetricProfile(double clamp_eps) : clamp_eps_(clamp_eps) {
  if (!(clamp_eps >= 0.0 && clamp_eps < 0.5))
    throw std::invalid_argument("IsoperimetricProfile: clamp_eps must lie in [0, 1/2)");
}

double IsoperimetricProfile::operator()(double p) const {
  if (!(p >= 0.0 && p <= 1.0)) throw_domain("isoperimetric_profile", p);
  if (p <= clamp_eps_ || p >= 1.0 - clamp_eps_) return 0.0;
  const double a = std_normal_quantile(p);
  return std_normal_pdf(a);
}

std::pair<double, double> IsoperimetricProfile::derivatives(double p) const {
  if (!(p > 0.0 && p < 1.0)) throw_domain("isoperimetric_profile_derivatives", p);
  const double a = std_normal_quantile(p);
  return {-a, -1.0 / std_normal_pdf(a)};
}

double isoperimetric_profile(double p) { return IsoperimetricProfile{}(p); }

std::pair<double, double> isoperimetric_profile_derivatives(double p) {
  return IsoperimetricProfile{}.derivatives(p);
}

}  // namespace gpc
