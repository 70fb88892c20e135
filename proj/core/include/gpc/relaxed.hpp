#pragma once

// The relaxed perimeter  F(u) = int sqrt(U(u)^2 + |Du|^2) dgamma  on
// [0,1]-valued fields, its dual representation, the isoperimetric deficit
// and prescribed-curvature energies.

#include <limits>
#include <optional>
#include <vector>

#include "gpc/field.hpp"

namespace gpc {

inline constexpr double kInfiniteEnergy = std::numeric_limits<double>::infinity();

/// Cell-scheme relaxed energy; +infinity if any value lies outside [0,1].
double relaxed_energy(const ScalarField& u);

/// Dual test pair (Phi, xi), stored per cell at the cell's lower-corner node.
struct DualTestPair {
  VectorField Phi;
  ScalarField xi;

  static DualTestPair zero(const GridPtr& grid);
  /// |Phi|^2 + xi^2 <= 1 + tol on every cell.
  bool feasible(double tol = 1e-12) const;
};

/// int u div_gamma(Phi) dgamma + int U(u) xi dgamma, with the divergence
/// adjoint to the cell gradient. Throws std::invalid_argument for an
/// infeasible pair.
double dual_pairing(const ScalarField& u, const DualTestPair& pair);

struct DualityResult {
  double value = 0.0;
  DualTestPair pair;
  std::vector<double> history;  ///< best value after each iteration
};

/// Projected gradient ascent of dual_pairing over feasible pairs, starting
/// from the zero pair, with joint pointwise projection of (Phi, xi) onto the
/// unit ball. Returns the best value seen, which is non-decreasing in
/// `iterations`.
DualityResult duality_lower_bound(const ScalarField& u, int iterations, double step = 0.25);

/// perimeter_gamma(E) - U(volume_gamma(E)).
double isoperimetric_deficit(const ScalarField& E);

/// relaxed_energy(u) + int u g dgamma; throws for u outside [0,1].
double prescribed_curvature_energy(const ScalarField& u, const ScalarField& g);

struct CurvatureOptions {
  /// Starting field; defaults to the constant 1/4 (1/2 is a critical point of
  /// U and would stall a symmetric descent).
  std::optional<ScalarField> init;
  /// Smoothing of the square root at |grad u| = U(u) = 0.
  double regularization = 1e-6;
  /// Continuation: the descent starts at this smoothing and divides it by
  /// 10 per stage down to `regularization`. A direct start at 1e-6 makes the
  /// problem so stiff that Barzilai-Borwein steps collapse.
  double continuation_start = 1e-1;
  double initial_step = 1e-3;
};

struct CurvatureResult {
  ScalarField u;
  std::vector<double> energies;  ///< regularized energy after each accepted step
  int accepted_steps = 0;
};

/// Projected (sub)gradient descent on the regularized prescribed-curvature
/// energy over 0 <= u <= 1 with Barzilai-Borwein steps and halving on energy
/// increase, with the steps split evenly over the continuation stages. The
/// regularized energy decreases with the smoothing, so the recorded energies
/// are non-increasing across stages too. steps = 0 returns the initializer
/// unchanged.
CurvatureResult minimize_prescribed_curvature(const ScalarField& g, int steps,
                                              const CurvatureOptions& options = {});

/// The regularized energy minimized above (regularization delta):
/// sum_c w_c sqrt(U_c^2 + |G_c u|^2 + delta^2) + int u g dgamma.
double regularized_curvature_energy(const ScalarField& u, const ScalarField& g, double delta);

}  // namespace gpc
