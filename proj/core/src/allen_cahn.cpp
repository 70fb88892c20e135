#include "gpc/allen_cahn.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "cell_ops.hpp"
#include "descent.hpp"
#include "gpc/gaussian.hpp"
#include "quadrature.hpp"

namespace gpc {

namespace {

void require_eps(double eps, const char* where) {
  if (!(eps > 0.0) || !std::isfinite(eps)) throw std::invalid_argument(std::string(where) + ": eps must be > 0");
}

std::vector<double> well_values(const DoubleWell& W, std::span<const double> u) {
  std::vector<double> out(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) out[i] = W(u[i]);
  return out;
}

}  // namespace

EnergySplit allen_cahn_energy_split(const ScalarField& u, double eps, const DoubleWell& W) {
  require_eps(eps, "allen_cahn_energy");
  const GaussianGrid& g = *u.grid;
  const std::vector<double> Wu = well_values(W, u.values);
  const auto cells = g.cells();
  const auto cw = g.cell_weights();
  EnergySplit out{0.0, 0.0};
  for (std::size_t k = 0; k < cells.size(); ++k) {
    const std::size_t c = cells[k];
    out.gradient += cw[k] * detail::edge_norm2(g, u.values, c);
    out.potential += cw[k] * detail::cell_mean(g, Wu, c);
  }
  out.gradient *= 0.5 * eps;
  out.potential /= eps;
  return out;
}

double allen_cahn_energy(const ScalarField& u, double eps, const DoubleWell& W) {
  const EnergySplit s = allen_cahn_energy_split(u, eps, W);
  return s.gradient + s.potential;
}

namespace {

void allen_cahn_gradient_into(const GaussianGrid& g, std::span<const double> u, double eps,
                              const DoubleWell& W, std::vector<double>& out) {
  std::fill(out.begin(), out.end(), 0.0);
  std::vector<double> dW(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) dW[i] = W.derivative(u[i]) / eps;
  const auto cells = g.cells();
  const auto cw = g.cell_weights();
  const auto off = g.corner_offsets();
  const double share = 1.0 / static_cast<double>(off.size());
  for (std::size_t k = 0; k < cells.size(); ++k) {
    const std::size_t c = cells[k];
    detail::edge_norm2_grad_add(g, u, c, 0.5 * eps * cw[k], out);
    for (std::size_t o : off) out[c + o] += cw[k] * share * dW[c + o];
  }
  const auto w = g.weights();
  for (std::size_t i = 0; i < out.size(); ++i) out[i] /= w[i];
}

}  // namespace

ScalarField allen_cahn_gradient(const ScalarField& u, double eps, const DoubleWell& W) {
  require_eps(eps, "allen_cahn_gradient");
  ScalarField out(u.grid);
  allen_cahn_gradient_into(*u.grid, u.values, eps, W, out.values);
  return out;
}

double young_lower_bound(const ScalarField& u, const DoubleWell& W) {
  const GaussianGrid& g = *u.grid;
  const std::vector<double> Wu = well_values(W, u.values);
  const auto cells = g.cells();
  const auto cw = g.cell_weights();
  double sum = 0.0;
  for (std::size_t k = 0; k < cells.size(); ++k) {
    const std::size_t c = cells[k];
    const double wbar = std::max(detail::cell_mean(g, Wu, c), 0.0);
    sum += cw[k] * std::sqrt(2.0 * wbar) * detail::norm(detail::cell_grad(g, u.values, c), g.dim());
  }
  return sum;
}

double level_set_lower_bound(const ScalarField& u, const DoubleWell& W, double delta, int n_levels) {
  if (!(delta >= 0.0 && delta < 0.5)) throw std::invalid_argument("level_set_lower_bound: delta must be in [0, 1/2)");
  if (n_levels < 1) throw std::invalid_argument("level_set_lower_bound: n_levels must be >= 1");
  const double partial = detail::gauss_legendre(
      [&W](double t) { return std::sqrt(2.0 * std::max(W(t), 0.0)); }, delta, 1.0 - delta, 256);
  const double dt = (1.0 - 2.0 * delta) / n_levels;
  double min_perimeter = std::numeric_limits<double>::infinity();
  for (int j = 0; j < n_levels; ++j) {
    const double t = delta + (j + 0.5) * dt;
    min_perimeter = std::min(min_perimeter, perimeter_gamma(superlevel_set(u, t)));
  }
  return partial * min_perimeter;
}

void project_mass(ScalarField& u, double mass) {
  const GaussianGrid& g = *u.grid;
  if (!(mass >= 0.0 && mass <= g.total_weight()))
    throw std::invalid_argument("project_mass: mass outside [0, total weight]");
  const auto w = g.weights();
  auto mass_at = [&](double s) {
    double m = 0.0;
    for (std::size_t i = 0; i < u.size(); ++i) m += w[i] * std::clamp(u[i] + s, 0.0, 1.0);
    return m;
  };
  // Try the plain shift first; bisect only if clipping moved the mass.
  double s = (mass - integrate(u)) / g.total_weight();
  if (std::abs(mass_at(s) - mass) > 1e-14) {
    double lo = -u.max(), hi = 1.0 - u.min();
    for (int it = 0; it < 200 && hi - lo > 1e-17 * (1.0 + std::abs(lo)); ++it) {
      const double mid = 0.5 * (lo + hi);
      (mass_at(mid) < mass ? lo : hi) = mid;
    }
    s = 0.5 * (lo + hi);
  }
  for (double& v : u.values) v = std::clamp(v + s, 0.0, 1.0);
}

AllenCahnResult minimize_allen_cahn(double eps, double mass, const DoubleWell& W, const GridPtr& grid,
                                    const ScalarField& init, int max_steps, double tol) {
  require_eps(eps, "minimize_allen_cahn");
  if (!(mass > 0.0 && mass < 1.0)) throw std::invalid_argument("minimize_allen_cahn: mass must be in (0,1)");
  if (!init.grid || !init.grid->same_shape(*grid))
    throw std::invalid_argument("minimize_allen_cahn: init lives on a different grid");
  const GaussianGrid& g = *grid;

  detail::DescentProblem problem;
  problem.weights = g.weights();
  problem.energy = [&](const std::vector<double>& x) {
    return allen_cahn_energy(ScalarField(grid, x), eps, W);
  };
  problem.gradient = [&](const std::vector<double>& x, std::vector<double>& out) {
    allen_cahn_gradient_into(g, x, eps, W, out);
  };
  problem.project = [&](std::vector<double>& x) {
    ScalarField f(grid, std::move(x));
    project_mass(f, mass);
    x = std::move(f.values);
  };

  std::vector<double> x0 = init.values;
  if (max_steps <= 0) problem.project(x0);
  detail::DescentResult res = detail::projected_descent(problem, std::move(x0), max_steps, tol, 1e-3);
  AllenCahnResult out;
  out.u = ScalarField(grid, std::move(res.x));
  out.energy = allen_cahn_energy(out.u, eps, W);
  out.energies = std::move(res.energies);
  if (out.energies.empty()) out.energies.push_back(out.energy);
  out.steps = res.accepted;
  out.converged = res.converged;
  return out;
}

// --- recovery profile --------------------------------------------------------

double Profile::truncated_well(double v) const {
  v = std::clamp(v, 0.0, 1.0);
  if (v <= delta || v >= 1.0 - delta) return plateau;
  return (*W_)(v);
}

double Profile::segment_integral(double a, double b) const {
  if (b <= a) return 0.0;
  return detail::gauss_legendre([this](double s) { return 1.0 / std::sqrt(2.0 * truncated_well(s)); }, a, b, 2);
}

double Profile::inverse(double v) const {
  if (v <= 0.0) return 0.0;
  if (v >= 1.0) return length;
  const auto it = std::upper_bound(values.begin(), values.end(), v);
  const std::size_t j = static_cast<std::size_t>(it - values.begin()) - 1;
  return t[j] + segment_integral(values[j], v);
}

double Profile::operator()(double s) const {
  if (s <= 0.0) return 0.0;
  if (s >= length) return 1.0;
  const auto it = std::upper_bound(t.begin(), t.end(), s);
  const std::size_t j = static_cast<std::size_t>(it - t.begin()) - 1;
  const double h = t[j + 1] - t[j];
  const double r = (s - t[j]) / h;
  // Cubic Hermite guess, then Newton on H_delta(v) = s inside the segment.
  const double h00 = (1 + 2 * r) * (1 - r) * (1 - r), h10 = r * (1 - r) * (1 - r);
  const double h01 = r * r * (3 - 2 * r), h11 = r * r * (r - 1);
  double v = h00 * values[j] + h10 * h * slopes[j] + h01 * values[j + 1] + h11 * h * slopes[j + 1];
  v = std::clamp(v, values[j], values[j + 1]);
  for (int k = 0; k < 3; ++k) {
    const double resid = t[j] + segment_integral(values[j], v) - s;
    v = std::clamp(v - resid * std::sqrt(2.0 * truncated_well(v)), values[j], values[j + 1]);
  }
  return v;
}

double Profile::derivative(double s) const {
  if (s <= 0.0 || s >= length) return 0.0;
  return std::sqrt(2.0 * truncated_well((*this)(s)));
}

Profile recovery_profile(double delta, const DoubleWell& W, int samples) {
  if (!(delta > 0.0 && delta < 0.25)) throw std::invalid_argument("recovery_profile: delta must be in (0, 1/4)");
  if (samples < 16) throw std::invalid_argument("recovery_profile: samples must be >= 16");
  constexpr int kProbe = 4001;
  for (int i = 1; i < kProbe - 1; ++i) {
    const double v = delta + (1.0 - 2.0 * delta) * i / (kProbe - 1);
    if (!(W(v) > 0.0)) throw std::invalid_argument("recovery_profile: W must be positive on (delta, 1-delta)");
  }
  Profile p;
  p.W_.emplace(W);
  p.delta = delta;
  double alpha = 0.0;
  for (int i = 0; i < kProbe; ++i) {
    const double v = delta * i / (kProbe - 1);
    alpha = std::max({alpha, W(v), W(1.0 - v)});
  }
  if (!(alpha > 0.0)) throw std::invalid_argument("recovery_profile: W vanishes on the truncation plateau");
  p.plateau = alpha;

  p.values.reserve(static_cast<std::size_t>(samples) + 2);
  for (int i = 0; i < samples; ++i) p.values.push_back(static_cast<double>(i) / (samples - 1));
  p.values.push_back(delta);
  p.values.push_back(1.0 - delta);
  std::sort(p.values.begin(), p.values.end());
  p.values.erase(std::unique(p.values.begin(), p.values.end()), p.values.end());

  p.t.assign(p.values.size(), 0.0);
  p.slopes.assign(p.values.size(), 0.0);
  for (std::size_t j = 0; j < p.values.size(); ++j) {
    if (j > 0) p.t[j] = p.t[j - 1] + p.segment_integral(p.values[j - 1], p.values[j]);
    p.slopes[j] = std::sqrt(2.0 * p.truncated_well(p.values[j]));
  }
  p.length = p.t.back();
  p.monotone = std::is_sorted(p.values.begin(), p.values.end());

  const double plateau_part = 2.0 * delta * std::sqrt(2.0 * alpha);
  p.constant = plateau_part + detail::gauss_legendre(
                                  [&W](double s) { return std::sqrt(2.0 * std::max(W(s), 0.0)); },
                                  delta, 1.0 - delta, 256);
  return p;
}

// --- recovery sequence -------------------------------------------------------

SetDescriptor SetDescriptor::half_space(std::span<const double> h, double c) {
  SetDescriptor d;
  d.kind = Kind::half_space;
  d.h = {0.0, 0.0, 0.0};
  double n2 = 0.0;
  for (std::size_t a = 0; a < h.size() && a < kMaxDim; ++a) {
    d.h[a] = h[a];
    n2 += h[a] * h[a];
  }
  if (h.empty() || h.size() > kMaxDim || std::abs(n2 - 1.0) > 1e-12)
    throw std::invalid_argument("SetDescriptor::half_space: h must be a unit vector");
  d.c = c;
  return d;
}

SetDescriptor SetDescriptor::level_set(std::function<double(const Point&)> f) {
  if (!f) throw std::invalid_argument("SetDescriptor::level_set: empty function");
  SetDescriptor d;
  d.kind = Kind::level_set;
  d.f = std::move(f);
  return d;
}

ScalarField distance_to_set(const SetDescriptor& E, const GridPtr& grid) {
  const GaussianGrid& g = *grid;
  const int m = g.dim();
  ScalarField d(grid);
  if (E.kind == SetDescriptor::Kind::half_space) {
    for (int a = m; a < kMaxDim; ++a)
      if (E.h[static_cast<std::size_t>(a)] != 0.0)
        throw std::invalid_argument("distance_to_set: half-space normal exceeds the grid dimension");
    for (std::size_t i = 0; i < g.size(); ++i) {
      double s = -E.c;
      for (int a = 0; a < m; ++a) s += E.h[static_cast<std::size_t>(a)] * g.coord(i, a);
      d[i] = std::max(s, 0.0);
    }
    return d;
  }
  if (E.kind != SetDescriptor::Kind::level_set || !E.f)
    throw std::invalid_argument("distance_to_set: unsupported set descriptor");

  const ScalarField f = sample(grid, E.f);
  std::vector<Point> boundary;
  const int n = g.points_per_axis();
  for (std::size_t i = 0; i < g.size(); ++i) {
    for (int a = 0; a < m; ++a) {
      if (g.axis_index(i, a) == n - 1) continue;
      const std::size_t j = i + g.stride(a);
      if ((f[i] < 0.0) == (f[j] < 0.0)) continue;
      Point p = g.point(i);
      p[static_cast<std::size_t>(a)] += g.spacing() * f[i] / (f[i] - f[j]);
      boundary.push_back(p);
    }
  }
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (f[i] < 0.0 || boundary.empty()) {
      d[i] = f[i] < 0.0 ? 0.0 : std::numeric_limits<double>::infinity();
      continue;
    }
    const Point x = g.point(i);
    double best = std::numeric_limits<double>::infinity();
    for (const Point& b : boundary) {
      double s = 0.0;
      for (int a = 0; a < m; ++a) {
        const double diff = x[static_cast<std::size_t>(a)] - b[static_cast<std::size_t>(a)];
        s += diff * diff;
      }
      best = std::min(best, s);
    }
    d[i] = std::sqrt(best);
  }
  return d;
}

ScalarField recovery_sequence(const SetDescriptor& E, double eps, const Profile& profile, const GridPtr& grid) {
  require_eps(eps, "recovery_sequence");
  ScalarField u = distance_to_set(E, grid);
  for (double& v : u.values) v = profile(v / eps);
  return u;
}

ScalarField recovery_sequence(const SetDescriptor& E, double eps, double delta, const GridPtr& grid,
                              const DoubleWell& W) {
  return recovery_sequence(E, eps, recovery_profile(delta, W), grid);
}

// --- sweep -------------------------------------------------------------------

SweepResult gamma_sweep(const std::vector<double>& eps_list, double mass, const DoubleWell& W,
                        const GridPtr& grid, const SweepOptions& options) {
  if (eps_list.empty()) throw std::invalid_argument("gamma_sweep: eps_list is empty");
  for (std::size_t i = 0; i < eps_list.size(); ++i) {
    if (!(eps_list[i] > 0.0)) throw std::invalid_argument("gamma_sweep: eps values must be > 0");
    if (i > 0 && !(eps_list[i] < eps_list[i - 1]))
      throw std::invalid_argument("gamma_sweep: eps_list must be strictly decreasing");
  }
  if (!(mass > 0.0 && mass < 1.0)) throw std::invalid_argument("gamma_sweep: mass must be in (0,1)");

  SweepResult out;
  out.well_constant = well_constant(W);
  out.limit = out.well_constant * isoperimetric_profile(mass);

  ScalarField current;
  if (options.init) {
    current = *options.init;
  } else {
    const double a = std_normal_quantile(1.0 - mass);
    const double e0 = eps_list.front();
    current = sample(grid, [a, e0](const Point& x) { return std_normal_cdf((x[0] - a) / e0); });
  }

  for (double eps : eps_list) {
    SweepRow row;
    row.eps = eps;
    try {
      AllenCahnResult res = minimize_allen_cahn(eps, mass, W, grid, current, options.max_steps, options.tol);
      const EnergySplit split = allen_cahn_energy_split(res.u, eps, W);
      row.energy = res.energy;
      row.gradient_energy = split.gradient;
      row.potential_energy = split.potential;
      row.l2_norm = l2_norm(res.u);
      row.mass_residual = integrate(res.u) - mass;
      row.steps = res.steps;
      row.converged = res.converged;
      if (!std::isfinite(row.energy)) throw std::runtime_error("non-finite energy");
      current = std::move(res.u);
    } catch (const std::exception& e) {
      row.status = std::string("failed: ") + e.what();
    }
    out.rows.push_back(row);
  }
  out.minimizer = current;
  return out;
}

}  // namespace gpc
