#include "gpc/double_well.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "quadrature.hpp"

namespace gpc {

DoubleWell::DoubleWell(Fn value, Fn derivative, double coercivity, double coercivity_radius,
                       std::string name)
    : value_(std::move(value)),
      derivative_(std::move(derivative)),
      coercivity_(coercivity),
      radius_(coercivity_radius),
      name_(std::move(name)) {
  if (!value_ || !derivative_) throw std::invalid_argument("DoubleWell: value and derivative required");
  if (!(coercivity_ > 0.0)) throw std::invalid_argument("DoubleWell: coercivity witness must be > 0");
  if (!(radius_ > 0.0)) throw std::invalid_argument("DoubleWell: coercivity radius must be > 0");
}

DoubleWell DoubleWell::quartic(double scale) {
  if (!(scale > 0.0)) throw std::invalid_argument("DoubleWell::quartic: scale must be > 0");
  // t^2 (t-1)^2 >= (t^2 - 2)/8: trivial for t^2 <= 2, and the quartic wins beyond.
  return DoubleWell([scale](double t) { return scale * t * t * (t - 1.0) * (t - 1.0); },
                    [scale](double t) { return scale * 2.0 * t * (t - 1.0) * (2.0 * t - 1.0); },
                    scale / 8.0, std::sqrt(2.0), "quartic");
}

std::string DoubleWell::validate(int samples, double range) const {
  std::ostringstream err;
  if (value_(0.0) != 0.0 || value_(1.0) != 0.0) err << "W(0) and W(1) must vanish; ";
  for (int i = 0; i < samples; ++i) {
    const double t = -range + 2.0 * range * i / (samples - 1);
    const double w = value_(t);
    if (w < 0.0) {
      err << "W(" << t << ") < 0; ";
      break;
    }
    if (w < coercivity_ * (t * t - radius_ * radius_) - 1e-12) {
      err << "coercivity witness fails at t=" << t << "; ";
      break;
    }
    if (std::abs(t) > 1e-9 && std::abs(t - 1.0) > 1e-9 && w <= 0.0) {
      err << "W vanishes at t=" << t << "; ";
      break;
    }
  }
  return err.str();
}

double well_constant(const DoubleWell& W, int quad_points) {
  if (quad_points < 64) throw std::invalid_argument("well_constant: quad_points must be >= 64");
  return detail::gauss_legendre(
      [&W](double t) { return std::sqrt(2.0 * std::max(W(t), 0.0)); }, 0.0, 1.0, quad_points);
}

}  // namespace gpc
