#include "gpc/field.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

#include "cell_ops.hpp"
#include "gpc/gaussian.hpp"

namespace gpc {

ScalarField::ScalarField(GridPtr g, double fill) : grid(std::move(g)), values(grid->size(), fill) {}

ScalarField::ScalarField(GridPtr g, std::vector<double> v) : grid(std::move(g)), values(std::move(v)) {
  if (values.size() != grid->size())
    throw std::invalid_argument("ScalarField: value count does not match grid size");
}

double ScalarField::min() const { return *std::min_element(values.begin(), values.end()); }
double ScalarField::max() const { return *std::max_element(values.begin(), values.end()); }
bool ScalarField::finite() const {
  return std::all_of(values.begin(), values.end(), [](double v) { return std::isfinite(v); });
}

VectorField::VectorField(GridPtr g)
    : grid(std::move(g)), values(grid->size() * static_cast<std::size_t>(grid->dim()), 0.0) {}

ScalarField sample(const GridPtr& grid, const std::function<double(const Point&)>& f) {
  ScalarField u(grid);
  for (std::size_t i = 0; i < grid->size(); ++i) u[i] = f(grid->point(i));
  return u;
}

VectorField sample_vector(const GridPtr& grid, const std::function<Point(const Point&)>& f) {
  VectorField v(grid);
  for (std::size_t i = 0; i < grid->size(); ++i) {
    const Point p = f(grid->point(i));
    for (int a = 0; a < grid->dim(); ++a) v.at(i, a) = p[static_cast<std::size_t>(a)];
  }
  return v;
}

void require_same_grid(const ScalarField& a, const ScalarField& b, const char* where) {
  if (!a.grid || !b.grid || !a.grid->same_shape(*b.grid) || a.size() != b.size())
    throw std::invalid_argument(std::string(where) + ": fields live on different grids");
}

double integrate(const ScalarField& f, const GaussianGrid& grid) {
  if (!f.grid || !f.grid->same_shape(grid) || f.size() != grid.size())
    throw std::invalid_argument("integrate: field shape does not match grid");
  const auto w = grid.weights();
  double sum = 0.0;
  for (std::size_t i = 0; i < w.size(); ++i) sum += f[i] * w[i];
  return sum;
}

double integrate(const ScalarField& f) { return integrate(f, *f.grid); }

double volume_gamma(const ScalarField& u) { return integrate(u); }

double weak_pairing(const ScalarField& u, const ScalarField& phi) {
  require_same_grid(u, phi, "weak_pairing");
  const auto w = u.grid->weights();
  double sum = 0.0;
  for (std::size_t i = 0; i < w.size(); ++i) sum += u[i] * phi[i] * w[i];
  return sum;
}

double l2_norm(const ScalarField& u) { return std::sqrt(weak_pairing(u, u)); }

double l2_distance(const ScalarField& u, const ScalarField& v) {
  require_same_grid(u, v, "l2_distance");
  const auto w = u.grid->weights();
  double sum = 0.0;
  for (std::size_t i = 0; i < w.size(); ++i) sum += (u[i] - v[i]) * (u[i] - v[i]) * w[i];
  return std::sqrt(sum);
}

namespace {

double nodal_derivative(const GaussianGrid& g, std::span<const double> v, std::size_t node,
                        int axis, std::size_t comp_stride, std::size_t comp) {
  const int n = g.points_per_axis();
  const int i = g.axis_index(node, axis);
  const std::size_t s = g.stride(axis);
  const double h = g.spacing();
  auto at = [&](std::size_t k) { return v[k * comp_stride + comp]; };
  if (i == 0) return (at(node + s) - at(node)) / h;
  if (i == n - 1) return (at(node) - at(node - s)) / h;
  return (at(node + s) - at(node - s)) / (2.0 * h);
}

}  // namespace

VectorField gradient(const ScalarField& u) {
  const GaussianGrid& g = *u.grid;
  if (g.points_per_axis() < 3) throw std::invalid_argument("gradient: need >= 3 points per axis");
  VectorField out(u.grid);
  for (std::size_t i = 0; i < g.size(); ++i)
    for (int a = 0; a < g.dim(); ++a) out.at(i, a) = nodal_derivative(g, u.values, i, a, 1, 0);
  return out;
}

ScalarField gaussian_divergence(const VectorField& Phi) {
  const GaussianGrid& g = *Phi.grid;
  if (Phi.values.size() != g.size() * static_cast<std::size_t>(g.dim()))
    throw std::invalid_argument("gaussian_divergence: vector field shape mismatch");
  ScalarField out(Phi.grid);
  const auto m = static_cast<std::size_t>(g.dim());
  for (std::size_t i = 0; i < g.size(); ++i) {
    double div = 0.0;
    for (int a = 0; a < g.dim(); ++a) {
      div += nodal_derivative(g, Phi.values, i, a, m, static_cast<std::size_t>(a));
      div -= g.coord(i, a) * Phi.at(i, a);
    }
    out[i] = div;
  }
  return out;
}

VectorField cell_gradient(const ScalarField& u) {
  const GaussianGrid& g = *u.grid;
  VectorField out(u.grid);
  const auto cells = g.cells();
  for (std::size_t c : cells) {
    const auto grad = detail::cell_grad(g, u.values, c);
    for (int a = 0; a < g.dim(); ++a) out.at(c, a) = grad[static_cast<std::size_t>(a)];
  }
  return out;
}

ScalarField cell_gaussian_divergence(const VectorField& Phi) {
  const GaussianGrid& g = *Phi.grid;
  std::vector<double> acc(g.size(), 0.0);
  const auto cells = g.cells();
  const auto cw = g.cell_weights();
  for (std::size_t k = 0; k < cells.size(); ++k) {
    detail::CellVec v{};
    for (int a = 0; a < g.dim(); ++a) v[static_cast<std::size_t>(a)] = -cw[k] * Phi.at(cells[k], a);
    detail::cell_grad_transpose_add(g, cells[k], v, acc);
  }
  const auto w = g.weights();
  for (std::size_t i = 0; i < acc.size(); ++i) acc[i] /= w[i];
  return ScalarField(Phi.grid, std::move(acc));
}

double cell_average(const GaussianGrid& grid, std::span<const double> values, std::size_t cell) {
  return detail::cell_mean(grid, values, cell);
}

double total_variation_gamma(const ScalarField& u) {
  const GaussianGrid& g = *u.grid;
  const auto cells = g.cells();
  const auto cw = g.cell_weights();
  double sum = 0.0;
  for (std::size_t k = 0; k < cells.size(); ++k)
    sum += cw[k] * detail::norm(detail::cell_grad(g, u.values, cells[k]), g.dim());
  return sum;
}

double dirichlet_energy(const ScalarField& u) {
  const GaussianGrid& g = *u.grid;
  const auto cells = g.cells();
  const auto cw = g.cell_weights();
  double sum = 0.0;
  for (std::size_t k = 0; k < cells.size(); ++k)
    sum += cw[k] * detail::norm2(detail::cell_grad(g, u.values, cells[k]), g.dim());
  return sum;
}

bool is_indicator(const ScalarField& u, double tol) {
  return std::all_of(u.values.begin(), u.values.end(), [tol](double v) {
    return std::abs(v) <= tol || std::abs(v - 1.0) <= tol;
  });
}

bool is_set_field(const ScalarField& u, double tol) {
  return std::all_of(u.values.begin(), u.values.end(),
                     [tol](double v) { return v >= -tol && v <= 1.0 + tol; });
}

ScalarField gaussian_blur(const ScalarField& u, double sigma_nodes) {
  if (!(sigma_nodes > 0.0)) return u;
  const GaussianGrid& g = *u.grid;
  const int radius = static_cast<int>(std::ceil(4.0 * sigma_nodes));
  std::vector<double> kernel(static_cast<std::size_t>(2 * radius + 1));
  double ksum = 0.0;
  for (int j = -radius; j <= radius; ++j) {
    const double v = std::exp(-0.5 * j * j / (sigma_nodes * sigma_nodes));
    kernel[static_cast<std::size_t>(j + radius)] = v;
    ksum += v;
  }
  for (double& v : kernel) v /= ksum;

  std::vector<double> cur = u.values;
  std::vector<double> next(cur.size());
  const int n = g.points_per_axis();
  for (int a = 0; a < g.dim(); ++a) {
    const std::size_t s = g.stride(a);
    for (std::size_t i = 0; i < cur.size(); ++i) {
      const int ia = g.axis_index(i, a);
      const std::size_t base = i - static_cast<std::size_t>(ia) * s;
      double acc = 0.0;
      for (int j = -radius; j <= radius; ++j) {
        const int k = std::clamp(ia + j, 0, n - 1);
        acc += kernel[static_cast<std::size_t>(j + radius)] * cur[base + static_cast<std::size_t>(k) * s];
      }
      next[i] = acc;
    }
    cur.swap(next);
  }
  return ScalarField(u.grid, std::move(cur));
}

namespace {
void require_set_field(const ScalarField& E, const char* where) {
  if (!is_set_field(E))
    throw std::invalid_argument(std::string(where) + ": input is not a set field (values outside [0,1])");
}
}  // namespace

double perimeter_gamma(const ScalarField& E) {
  require_set_field(E, "perimeter_gamma");
  return total_variation_gamma(gaussian_blur(E, kPerimeterMollifier));
}

double weighted_perimeter(const ScalarField& E, const ScalarField& gfield) {
  require_set_field(E, "weighted_perimeter");
  require_same_grid(E, gfield, "weighted_perimeter");
  const ScalarField smooth = gaussian_blur(E, kPerimeterMollifier);
  const GaussianGrid& g = *E.grid;
  const auto cells = g.cells();
  const auto cw = g.cell_weights();
  double sum = 0.0;
  for (std::size_t k = 0; k < cells.size(); ++k)
    sum += cw[k] * detail::cell_mean(g, gfield.values, cells[k]) *
           detail::norm(detail::cell_grad(g, smooth.values, cells[k]), g.dim());
  return sum;
}

double half_space_perimeter_exact(double c, double h_norm) {
  if (!(h_norm > 0.0)) throw std::invalid_argument("half_space_perimeter_exact: |h| must be > 0");
  return kInvSqrt2Pi * std::exp(-c * c / (2.0 * h_norm * h_norm));
}

ScalarField half_space_indicator(std::span<const double> h, double c, const GridPtr& grid) {
  if (static_cast<int>(h.size()) != grid->dim())
    throw std::invalid_argument("half_space_indicator: direction has wrong dimension");
  double norm2 = 0.0;
  for (double v : h) norm2 += v * v;
  if (std::abs(std::sqrt(norm2) - 1.0) > 1e-12)
    throw std::invalid_argument("half_space_indicator: direction must be a unit vector");
  ScalarField E(grid);
  for (std::size_t i = 0; i < grid->size(); ++i) {
    double s = 0.0;
    for (int a = 0; a < grid->dim(); ++a) s += h[static_cast<std::size_t>(a)] * grid->coord(i, a);
    E[i] = s < c ? 1.0 : 0.0;
  }
  return E;
}

ScalarField superlevel_set(const ScalarField& u, double t) {
  ScalarField E(u.grid);
  for (std::size_t i = 0; i < u.size(); ++i) E[i] = u[i] > t ? 1.0 : 0.0;
  return E;
}

ScalarField volume_sublevel_set(const ScalarField& f, double target, bool exact) {
  const GaussianGrid& g = *f.grid;
  if (!(target >= 0.0 && target <= g.total_weight()))
    throw std::invalid_argument("volume_sublevel_set: target outside [0, total weight]");
  std::vector<std::size_t> order(f.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return f[a] < f[b] || (f[a] == f[b] && a < b);
  });
  ScalarField E(f.grid);
  double mass = 0.0;
  for (std::size_t idx : order) {
    if (mass >= target) break;
    const double w = g.weight(idx);
    if (exact && mass + w > target) {
      E[idx] = std::clamp((target - mass) / w, 0.0, 1.0);
      break;
    }
    E[idx] = 1.0;
    mass += w;
  }
  return E;
}

double coarea_total_variation(const ScalarField& u, int n_levels) {
  if (n_levels < 16) throw std::invalid_argument("coarea_total_variation: n_levels must be >= 16");
  const double lo = u.min();
  const double hi = u.max();
  if (!(hi > lo)) return 0.0;
  const double dt = (hi - lo) / n_levels;
  double sum = 0.0;
  for (int j = 0; j < n_levels; ++j) sum += dt * perimeter_gamma(superlevel_set(u, lo + (j + 0.5) * dt));
  return sum;
}

WeightedCoarea weighted_coarea(const ScalarField& u, const ScalarField& gfield, int n_levels) {
  require_same_grid(u, gfield, "weighted_coarea");
  if (gfield.min() < 0.0) throw std::invalid_argument("weighted_coarea: g must be non-negative");
  if (n_levels < 16) throw std::invalid_argument("weighted_coarea: n_levels must be >= 16");
  const GaussianGrid& g = *u.grid;
  const auto cells = g.cells();
  const auto cw = g.cell_weights();
  WeightedCoarea out{0.0, 0.0};
  for (std::size_t k = 0; k < cells.size(); ++k)
    out.left += cw[k] * detail::cell_mean(g, gfield.values, cells[k]) *
                detail::norm(detail::cell_grad(g, u.values, cells[k]), g.dim());
  const double lo = u.min();
  const double hi = u.max();
  if (!(hi > lo)) return out;
  const double dt = (hi - lo) / n_levels;
  for (int j = 0; j < n_levels; ++j)
    out.right += dt * weighted_perimeter(superlevel_set(u, lo + (j + 0.5) * dt), gfield);
  return out;
}

}  // namespace gpc
