#pragma once

#include <array>

namespace gpc::detail {

// 5-point Gauss-Legendre nodes and weights on [-1, 1].
inline constexpr std::array<double, 5> kGLNodes = {
    -0.9061798459386639927976, -0.5384693101056830910363, 0.0,
    0.5384693101056830910363, 0.9061798459386639927976};
inline constexpr std::array<double, 5> kGLWeights = {
    0.2369268850561890875143, 0.4786286704993664680413, 0.5688888888888888888889,
    0.4786286704993664680413, 0.2369268850561890875143};

/// Composite 5-point Gauss-Legendre over `panels` equal panels of [a, b].
template <class F>
double gauss_legendre(F&& f, double a, double b, int panels) {
  if (panels < 1 || !(b > a)) return 0.0;
  const double h = (b - a) / panels;
  double sum = 0.0;
  for (int p = 0; p < panels; ++p) {
    const double mid = a + (p + 0.5) * h;
    double panel = 0.0;
    for (std::size_t k = 0; k < kGLNodes.size(); ++k) panel += kGLWeights[k] * f(mid + 0.5 * h * kGLNodes[k]);
    sum += 0.5 * h * panel;
  }
  return sum;
}

}  // namespace gpc::detail
