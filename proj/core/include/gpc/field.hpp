#pragma once

// Scalar and vector fields on a GaussianGrid, and the discrete Gaussian BV
// calculus built on them.
//
// Two discrete gradients live here:
//  * `gradient` is nodal (centred in the interior, one-sided at the
//    truncation boundary) and pairs with `gaussian_divergence`;
//  * the *cell* gradient is the gradient of the multilinear interpolant at
//    each cell centre. Every variational quantity (total variation,
//    perimeter, Dirichlet energy, relaxed energy) is a cell quadrature
//    sum_c w_c f(cell average of u, cell gradient of u), which is isotropic
//    enough for tilted interfaces and has an exact discrete adjoint.

#include <array>
#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "gpc/grid.hpp"

namespace gpc {

using Point = std::array<double, kMaxDim>;

struct ScalarField {
  GridPtr grid;
  std::vector<double> values;

  ScalarField() = default;
  ScalarField(GridPtr g, double fill = 0.0);
  ScalarField(GridPtr g, std::vector<double> v);

  std::size_t size() const { return values.size(); }
  double& operator[](std::size_t i) { return values[i]; }
  double operator[](std::size_t i) const { return values[i]; }

  double min() const;
  double max() const;
  bool finite() const;
};

/// R^m-valued field stored node-major: values[node * dim + axis].
struct VectorField {
  GridPtr grid;
  std::vector<double> values;

  VectorField() = default;
  explicit VectorField(GridPtr g);

  int dim() const { return grid->dim(); }
  double& at(std::size_t node, int axis) {
    return values[node * static_cast<std::size_t>(dim()) + static_cast<std::size_t>(axis)];
  }
  double at(std::size_t node, int axis) const {
    return values[node * static_cast<std::size_t>(dim()) + static_cast<std::size_t>(axis)];
  }
};

/// Samples f at every node.
ScalarField sample(const GridPtr& grid, const std::function<double(const Point&)>& f);
VectorField sample_vector(const GridPtr& grid,
                          const std::function<Point(const Point&)>& f);

// --- quadrature --------------------------------------------------------------

/// sum_i f(x_i) w_i; throws std::invalid_argument if f lives on another grid.
double integrate(const ScalarField& f, const GaussianGrid& grid);
double integrate(const ScalarField& f);
double volume_gamma(const ScalarField& u);
/// Weak L^2_gamma pairing int u*phi dgamma.
double weak_pairing(const ScalarField& u, const ScalarField& phi);
double l2_norm(const ScalarField& u);
double l2_distance(const ScalarField& u, const ScalarField& v);

// --- nodal calculus ----------------------------------------------------------

VectorField gradient(const ScalarField& u);
/// div Phi - <x, Phi> with the nodal difference scheme of `gradient`.
ScalarField gaussian_divergence(const VectorField& Phi);

// --- cell calculus -----------------------------------------------------------

/// Cell gradients stored at the lower-corner node of each cell; nodes that are
/// not lower corners hold zero.
VectorField cell_gradient(const ScalarField& u);

/// Discrete Gaussian divergence adjoint to `cell_gradient`:
///   sum_i w_i u_i (div Phi)_i = - sum_c w_c <G_c u, Phi_c>
/// where Phi_c is read at the lower-corner node of cell c.
ScalarField cell_gaussian_divergence(const VectorField& Phi);

/// Mean of `values` over the corners of `cell`.
double cell_average(const GaussianGrid& grid, std::span<const double> values, std::size_t cell);

/// int |grad u| dgamma, isotropic cell scheme.
double total_variation_gamma(const ScalarField& u);
/// int |grad u|^2 dgamma, cell scheme.
double dirichlet_energy(const ScalarField& u);

// --- sets --------------------------------------------------------------------

/// Values in {0,1} (within tol).
bool is_indicator(const ScalarField& u, double tol = 0.0);
/// Values in [0,1] (within tol). Set fields may carry partial-volume
/// boundary nodes, which is how exactly volume-preserving symmetrals are
/// represented.
bool is_set_field(const ScalarField& u, double tol = 1e-12);

/// Separable Gaussian filter, standard deviation `sigma_nodes` grid
/// spacings, replicated boundary values.
ScalarField gaussian_blur(const ScalarField& u, double sigma_nodes);

/// Filter width used by `perimeter_gamma` before taking the total variation.
inline constexpr double kPerimeterMollifier = 1.5;

/// Gaussian perimeter of a set field (values in [0,1], binary or with
/// partial-volume boundary nodes): total variation of the set after a fixed
/// 1.5-node Gaussian mollification. Throws std::invalid_argument for values
/// outside [0,1].
double perimeter_gamma(const ScalarField& E);
/// int g d|D chi_E| with the same discretization as perimeter_gamma.
double weighted_perimeter(const ScalarField& E, const ScalarField& g);

/// (1/sqrt(2 pi)) exp(-c^2 / (2 |h|^2)).
double half_space_perimeter_exact(double c, double h_norm);

/// Indicator of {<h,x> < c}; h must be a unit vector (tolerance 1e-12).
ScalarField half_space_indicator(std::span<const double> h, double c, const GridPtr& grid);

/// Indicator of {u > t} (strict).
ScalarField superlevel_set(const ScalarField& u, double t);

/// Set of the lowest-valued nodes of f (ties by index) whose Gaussian volume
/// first reaches `target`. With `exact`, the last node carries the fractional
/// value that makes the volume equal target up to rounding.
ScalarField volume_sublevel_set(const ScalarField& f, double target, bool exact);

/// Midpoint-rule coarea sum  sum_j dt * P({u > t_j}),  t_j = min u + (j+1/2) dt.
double coarea_total_variation(const ScalarField& u, int n_levels);

struct WeightedCoarea {
  double left;   ///< int g |grad u| dgamma
  double right;  ///< int_R int g d|D chi_{u>t}| dt
};
/// Both sides of the weighted coarea identity; g must be non-negative.
WeightedCoarea weighted_coarea(const ScalarField& u, const ScalarField& g, int n_levels);

void require_same_grid(const ScalarField& a, const ScalarField& b, const char* where);

}  // namespace gpc
