#pragma once

// Ehrhard symmetrization of sets and functions, Ehrhard sets, and the
// cylindrical conditional expectation onto the leading axes.
//
// Symmetrals are represented as set fields with partial-volume boundary
// nodes: each column along the symmetrization axis is filled from below
// with exactly the prescribed fraction of its quadrature weight. Volumes and
// conditional expectations are therefore preserved to rounding error, and the
// filled half-line ends at a discrete approximation of alpha(v).

#include <vector>

#include "gpc/field.hpp"

namespace gpc {

/// (E_k u)(x_1..x_k) = int u(x_1..x_k, y) dgamma_{m-k}(y), computed by
/// normalized quadrature over the trailing axes. Returns a field on the
/// k-dimensional grid with the same axes. Requires 1 <= k < m.
ScalarField conditional_expectation(const ScalarField& u, int k);

/// Fills a column of node weights from the low end so that the filled
/// fraction of the column's weight equals `fraction` in [0,1].
std::vector<double> fill_half_line(std::span<const double> column_weights, double fraction);

/// ES_m(v) = {x_{m+1} < alpha(v(x))} on the (m+1)-dimensional grid `target`
/// (same axes as v's grid). v must take values in [0,1].
ScalarField ehrhard_set(const ScalarField& v, const GridPtr& target);
ScalarField ehrhard_set(const ScalarField& v);

/// Ehrhard symmetral of a set field along the first k axes (1 <= k <= m).
/// For k = 1 this is the half-space {x_1 < alpha(gamma(E))}; for k > 1 it is
/// ES_{k-1}(E_{k-1} chi_E) on axes 1..k, constant along axes k+1..m.
ScalarField ehrhard_symmetrize_set(const ScalarField& E, int k);

struct SymmetrizedFunction {
  ScalarField field;
  int n_levels = 0;
  double level_step = 0.0;
  std::vector<double> levels;               ///< midpoint levels t_j
  std::vector<double> volumes;              ///< gamma({u > t_j})
  std::vector<double> symmetrized_volumes;  ///< gamma(E*_{t_j})
};

/// u* = min u + dt * sum_j chi_{E*_{t_j}} over n_levels midpoint levels of
/// [min u, max u]. Requires n_levels >= 32.
SymmetrizedFunction ehrhard_symmetrize_function(const ScalarField& u, int k, int n_levels);

}  // namespace gpc
