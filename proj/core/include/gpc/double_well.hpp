#pragma once

#include <functional>
#include <string>

namespace gpc {

/// Double-well potential W >= 0 vanishing exactly at 0 and 1, with a
/// recorded coercivity witness (C, R) such that W(t) >= C (t^2 - R^2).
///
/// R = 1 is unattainable for any well with W''(1) finite (W ~ (t-1)^2 loses
/// to the linear term near t = 1), so the radius is part of the witness.
class DoubleWell {
 public:
  using Fn = std::function<double(double)>;

  DoubleWell(Fn value, Fn derivative, double coercivity, double coercivity_radius = 1.0,
             std::string name = "custom");

  /// W(t) = scale * t^2 (t - 1)^2.
  static DoubleWell quartic(double scale = 1.0);

  double operator()(double t) const { return value_(t); }
  double derivative(double t) const { return derivative_(t); }
  double coercivity() const { return coercivity_; }
  double coercivity_radius() const { return radius_; }
  const std::string& name() const { return name_; }

  /// Checks W >= 0, W(0) = W(1) = 0, W > 0 away from {0,1} and the
  /// coercivity witness on `samples` points of [-range, range]; returns an
  /// empty string when every check passes, otherwise a description.
  std::string validate(int samples = 4001, double range = 4.0) const;

 private:
  Fn value_;
  Fn derivative_;
  double coercivity_;
  double radius_;
  std::string name_;
};

/// c_W = int_0^1 sqrt(2 W(t)) dt by composite 5-point Gauss-Legendre on
/// `quad_points` panels (quad_points >= 64).
double well_constant(const DoubleWell& W, int quad_points = 256);

}  // namespace gpc
