#include "gpc/ehrhard.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace gpc {

namespace {

std::size_t ipow(std::size_t base, int exp) {
  std::size_t r = 1;
  for (int i = 0; i < exp; ++i) r *= base;
  return r;
}

// Quadrature weights of an `axes`-dimensional block of trailing axes.
std::vector<double> trailing_weights(const GaussianGrid& g, int axes) {
  const auto aw = g.axis_weights();
  const auto n = static_cast<std::size_t>(g.points_per_axis());
  std::vector<double> w(ipow(n, axes), 1.0);
  for (std::size_t t = 0; t < w.size(); ++t) {
    std::size_t rest = t;
    for (int a = 0; a < axes; ++a) {
      w[t] *= aw[rest % n];
      rest /= n;
    }
  }
  return w;
}

void require_set(const ScalarField& E, const char* where) {
  if (!is_set_field(E))
    throw std::invalid_argument(std::string(where) + ": input is not a set field (values outside [0,1])");
}

}  // namespace

ScalarField conditional_expectation(const ScalarField& u, int k) {
  const GaussianGrid& g = *u.grid;
  const int m = g.dim();
  if (k < 1 || k >= m)
    throw std::invalid_argument("conditional_expectation: k must satisfy 1 <= k < m");
  const std::vector<double> wt = trailing_weights(g, m - k);
  double wsum = 0.0;
  for (double w : wt) wsum += w;
  GridPtr base_grid = g.with_dim(k);
  ScalarField out(base_grid);
  const std::size_t T = wt.size();
  for (std::size_t b = 0; b < out.size(); ++b) {
    double acc = 0.0;
    for (std::size_t t = 0; t < T; ++t) acc += u[b * T + t] * wt[t];
    out[b] = acc / wsum;
  }
  return out;
}

std::vector<double> fill_half_line(std::span<const double> column_weights, double fraction) {
  if (!(fraction >= -1e-12 && fraction <= 1.0 + 1e-12))
    throw std::invalid_argument("fill_half_line: fraction outside [0,1]");
  fraction = std::clamp(fraction, 0.0, 1.0);
  double total = 0.0;
  for (double w : column_weights) total += w;
  double remaining = fraction * total;
  std::vector<double> fill(column_weights.size(), 0.0);
  if (fraction >= 1.0) {
    std::fill(fill.begin(), fill.end(), 1.0);
    return fill;
  }
  for (std::size_t i = 0; i < fill.size() && remaining > 0.0; ++i) {
    const double w = column_weights[i];
    if (remaining >= w) {
      fill[i] = 1.0;
      remaining -= w;
    } else {
      fill[i] = remaining / w;
      remaining = 0.0;
    }
  }
  return fill;
}

namespace {

// Symmetral on `grid` along axis `axis` (0-based) with per-base fractions
// `v` indexed by the leading `axis` axes; constant along trailing axes.
ScalarField fill_columns(const GridPtr& grid, int axis, std::span<const double> v) {
  const GaussianGrid& g = *grid;
  const auto n = static_cast<std::size_t>(g.points_per_axis());
  const std::size_t trailing = ipow(n, g.dim() - axis - 1);
  const auto aw = g.axis_weights();
  ScalarField out(grid);
  for (std::size_t b = 0; b < v.size(); ++b) {
    const std::vector<double> column = fill_half_line(aw, v[b]);
    for (std::size_t i = 0; i < n; ++i) {
      const std::size_t start = (b * n + i) * trailing;
      std::fill_n(out.values.begin() + static_cast<std::ptrdiff_t>(start), trailing, column[i]);
    }
  }
  return out;
}

}  // namespace

ScalarField ehrhard_set(const ScalarField& v, const GridPtr& target) {
  const GaussianGrid& g = *v.grid;
  if (target->dim() != g.dim() + 1 || !target->same_axes(g))
    throw std::invalid_argument("ehrhard_set: target grid must have dim m+1 and the same axes");
  if (!is_set_field(v)) throw std::invalid_argument("ehrhard_set: v must take values in [0,1]");
  return fill_columns(target, g.dim(), v.values);
}

ScalarField ehrhard_set(const ScalarField& v) { return ehrhard_set(v, v.grid->with_dim(v.grid->dim() + 1)); }

ScalarField ehrhard_symmetrize_set(const ScalarField& E, int k) {
  const GaussianGrid& g = *E.grid;
  if (k < 1 || k > g.dim()) throw std::invalid_argument("ehrhard_symmetrize_set: k must satisfy 1 <= k <= m");
  require_set(E, "ehrhard_symmetrize_set");
  if (k == 1) {
    const double fraction = volume_gamma(E) / g.total_weight();
    const double f[1] = {std::clamp(fraction, 0.0, 1.0)};
    return fill_columns(E.grid, 0, f);
  }
  const ScalarField v = conditional_expectation(E, k - 1);
  std::vector<double> fractions(v.values);
  for (double& x : fractions) x = std::clamp(x, 0.0, 1.0);
  return fill_columns(E.grid, k - 1, fractions);
}

SymmetrizedFunction ehrhard_symmetrize_function(const ScalarField& u, int k, int n_levels) {
  if (n_levels < 32) throw std::invalid_argument("ehrhard_symmetrize_function: n_levels must be >= 32");
  const GaussianGrid& g = *u.grid;
  if (k < 1 || k > g.dim()) throw std::invalid_argument("ehrhard_symmetrize_function: k must satisfy 1 <= k <= m");
  if (!u.finite()) throw std::invalid_argument("ehrhard_symmetrize_function: u must be finite");

  SymmetrizedFunction out;
  out.n_levels = n_levels;
  const double lo = u.min();
  const double hi = u.max();
  out.field = ScalarField(u.grid, lo);
  if (!(hi > lo)) return out;

  const double dt = (hi - lo) / n_levels;
  out.level_step = dt;
  for (int j = 0; j < n_levels; ++j) {
    const double t = lo + (j + 0.5) * dt;
    const ScalarField level = superlevel_set(u, t);
    const ScalarField sym = ehrhard_symmetrize_set(level, k);
    for (std::size_t i = 0; i < sym.size(); ++i) out.field[i] += dt * sym[i];
    out.levels.push_back(t);
    out.volumes.push_back(volume_gamma(level));
    out.symmetrized_volumes.push_back(volume_gamma(sym));
  }
  return out;
}

}  // namespace gpc
