#include "gpc/relaxed.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "cell_ops.hpp"
#include "descent.hpp"
#include "gpc/gaussian.hpp"

namespace gpc {

namespace {

std::vector<double> profile_values(std::span<const double> u) {
  const IsoperimetricProfile U;
  std::vector<double> out(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) out[i] = U(std::clamp(u[i], 0.0, 1.0));
  return out;
}

// U'(p) = -alpha(p), with p kept away from {0,1} where the slope is infinite.
double profile_slope(double p) {
  constexpr double kEdge = 1e-12;
  return -std_normal_quantile(std::clamp(p, kEdge, 1.0 - kEdge));
}

}  // namespace

double relaxed_energy(const ScalarField& u) {
  if (!is_set_field(u, 0.0)) return kInfiniteEnergy;
  const GaussianGrid& g = *u.grid;
  const std::vector<double> Uu = profile_values(u.values);
  const auto cells = g.cells();
  const auto cw = g.cell_weights();
  double sum = 0.0;
  for (std::size_t k = 0; k < cells.size(); ++k) {
    const double Uc = detail::cell_mean(g, Uu, cells[k]);
    const double grad2 = detail::norm2(detail::cell_grad(g, u.values, cells[k]), g.dim());
    sum += cw[k] * std::sqrt(Uc * Uc + grad2);
  }
  return sum;
}

DualTestPair DualTestPair::zero(const GridPtr& grid) { return {VectorField(grid), ScalarField(grid)}; }

bool DualTestPair::feasible(double tol) const {
  const int m = Phi.dim();
  for (std::size_t i = 0; i < xi.size(); ++i) {
    double s = xi[i] * xi[i];
    for (int a = 0; a < m; ++a) s += Phi.at(i, a) * Phi.at(i, a);
    if (!(s <= 1.0 + tol)) return false;
  }
  return true;
}

double dual_pairing(const ScalarField& u, const DualTestPair& pair) {
  require_same_grid(u, pair.xi, "dual_pairing");
  if (!pair.Phi.grid || !pair.Phi.grid->same_shape(*u.grid))
    throw std::invalid_argument("dual_pairing: Phi lives on a different grid");
  if (!pair.feasible()) throw std::invalid_argument("dual_pairing: infeasible dual pair");
  const GaussianGrid& g = *u.grid;
  const double flux = weak_pairing(u, cell_gaussian_divergence(pair.Phi));
  const std::vector<double> Uu = profile_values(u.values);
  const auto cells = g.cells();
  const auto cw = g.cell_weights();
  double bulk = 0.0;
  for (std::size_t k = 0; k < cells.size(); ++k)
    bulk += cw[k] * detail::cell_mean(g, Uu, cells[k]) * pair.xi[cells[k]];
  return flux + bulk;
}

DualityResult duality_lower_bound(const ScalarField& u, int iterations, double step) {
  if (!is_set_field(u, 0.0)) throw std::invalid_argument("duality_lower_bound: u must take values in [0,1]");
  const GaussianGrid& g = *u.grid;
  const int m = g.dim();
  DualityResult out;
  out.pair = DualTestPair::zero(u.grid);
  out.value = 0.0;
  DualTestPair current = out.pair;

  const std::vector<double> Uu = profile_values(u.values);
  const auto cells = g.cells();
  // Ascent direction of the (linear) pairing in the cell-weighted metric.
  std::vector<detail::CellVec> flux_dir(cells.size());
  std::vector<double> bulk_dir(cells.size());
  for (std::size_t k = 0; k < cells.size(); ++k) {
    flux_dir[k] = detail::cell_grad(g, u.values, cells[k]);
    for (int a = 0; a < m; ++a) flux_dir[k][static_cast<std::size_t>(a)] *= -1.0;
    bulk_dir[k] = detail::cell_mean(g, Uu, cells[k]);
  }

  for (int it = 0; it < iterations; ++it) {
    for (std::size_t k = 0; k < cells.size(); ++k) {
      const std::size_t c = cells[k];
      double s = 0.0;
      for (int a = 0; a < m; ++a) {
        double& phi = current.Phi.at(c, a);
        phi += step * flux_dir[k][static_cast<std::size_t>(a)];
        s += phi * phi;
      }
      double& xi = current.xi[c];
      xi += step * bulk_dir[k];
      s += xi * xi;
      if (s > 1.0) {
        const double inv = 1.0 / std::sqrt(s);
        for (int a = 0; a < m; ++a) current.Phi.at(c, a) *= inv;
        xi *= inv;
      }
    }
    const double value = dual_pairing(u, current);
    if (value > out.value) {
      out.value = value;
      out.pair = current;
    }
    out.history.push_back(out.value);
  }
  return out;
}

double isoperimetric_deficit(const ScalarField& E) {
  if (!is_set_field(E)) throw std::invalid_argument("isoperimetric_deficit: input is not a set field");
  const double vol = std::clamp(volume_gamma(E), 0.0, 1.0);
  return perimeter_gamma(E) - isoperimetric_profile(vol);
}

double prescribed_curvature_energy(const ScalarField& u, const ScalarField& g) {
  require_same_grid(u, g, "prescribed_curvature_energy");
  if (!is_set_field(u, 0.0))
    throw std::invalid_argument("prescribed_curvature_energy: u must take values in [0,1]");
  return relaxed_energy(u) + weak_pairing(u, g);
}

double regularized_curvature_energy(const ScalarField& u, const ScalarField& gfield, double delta) {
  require_same_grid(u, gfield, "regularized_curvature_energy");
  const GaussianGrid& g = *u.grid;
  const std::vector<double> Uu = profile_values(u.values);
  const auto cells = g.cells();
  const auto cw = g.cell_weights();
  double sum = 0.0;
  for (std::size_t k = 0; k < cells.size(); ++k) {
    const double Uc = detail::cell_mean(g, Uu, cells[k]);
    const double grad2 = detail::norm2(detail::cell_grad(g, u.values, cells[k]), g.dim());
    sum += cw[k] * std::sqrt(Uc * Uc + grad2 + delta * delta);
  }
  return sum + weak_pairing(u, gfield);
}

namespace {

void curvature_gradient(const GaussianGrid& g, const ScalarField& gfield, double delta,
                        const std::vector<double>& x, std::vector<double>& out) {
  const std::vector<double> Uu = profile_values(x);
  std::fill(out.begin(), out.end(), 0.0);
  const auto cells = g.cells();
  const auto cw = g.cell_weights();
  const auto off = g.corner_offsets();
  const double corner_share = 1.0 / static_cast<double>(off.size());
  for (std::size_t k = 0; k < cells.size(); ++k) {
    const std::size_t c = cells[k];
    const double Uc = detail::cell_mean(g, Uu, c);
    detail::CellVec grad = detail::cell_grad(g, x, c);
    const double r = std::sqrt(Uc * Uc + detail::norm2(grad, g.dim()) + delta * delta);
    const double scale = cw[k] / r;
    for (std::size_t o : off) out[c + o] += scale * Uc * corner_share * profile_slope(x[c + o]);
    for (int a = 0; a < g.dim(); ++a) grad[static_cast<std::size_t>(a)] *= scale;
    detail::cell_grad_transpose_add(g, c, grad, out);
  }
  const auto w = g.weights();
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = out[i] / w[i] + gfield[i];
}

}  // namespace

CurvatureResult minimize_prescribed_curvature(const ScalarField& gfield, int steps,
                                              const CurvatureOptions& options) {
  if (!gfield.finite()) throw std::invalid_argument("minimize_prescribed_curvature: g must be bounded");
  if (!(options.regularization > 0.0))
    throw std::invalid_argument("minimize_prescribed_curvature: regularization must be > 0");
  const GridPtr grid = gfield.grid;
  const GaussianGrid& g = *grid;
  ScalarField init = options.init ? *options.init : ScalarField(grid, 0.25);
  require_same_grid(init, gfield, "minimize_prescribed_curvature");

  CurvatureResult out;
  if (steps <= 0) {
    out.u = std::move(init);
    return out;
  }
  std::vector<double> deltas;
  for (double d = std::max(options.continuation_start, options.regularization); d > options.regularization * 1.0000001;
       d /= 10.0)
    deltas.push_back(d);
  deltas.push_back(options.regularization);
  const int stages = std::min(static_cast<int>(deltas.size()), steps);
  deltas.erase(deltas.begin(), deltas.end() - stages);

  std::vector<double> x = std::move(init.values);
  for (int s = 0; s < stages; ++s) {
    const double delta = deltas[static_cast<std::size_t>(s)];
    const int budget = steps / stages + (s == stages - 1 ? steps % stages : 0);
    detail::DescentProblem problem;
    problem.weights = g.weights();
    problem.energy = [&](const std::vector<double>& v) {
      return regularized_curvature_energy(ScalarField(grid, v), gfield, delta);
    };
    problem.gradient = [&](const std::vector<double>& v, std::vector<double>& o) {
      curvature_gradient(g, gfield, delta, v, o);
    };
    problem.project = [](std::vector<double>& v) {
      for (double& e : v) e = std::clamp(e, 0.0, 1.0);
    };
    detail::DescentResult res = detail::projected_descent(problem, std::move(x), budget, 0.0, options.initial_step);
    x = std::move(res.x);
    const std::size_t skip = out.energies.empty() ? 0 : 1;
    out.energies.insert(out.energies.end(), res.energies.begin() + static_cast<std::ptrdiff_t>(skip),
                        res.energies.end());
    out.accepted_steps += res.accepted;
  }
  out.u = ScalarField(grid, std::move(x));
  return out;
}

}  // namespace gpc
