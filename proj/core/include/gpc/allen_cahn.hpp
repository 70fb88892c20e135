#pragma once

// Gaussian Allen-Cahn energies
//   F_eps(u) = int eps/2 |grad u|^2 + W(u)/eps dgamma
// on the cell scheme of field.hpp. |grad u|^2 in a cell is the per-axis mean
// of the squared edge quotients (the centre gradient would leave the
// checkerboard mode free in m >= 2) and W(u) is the cell mean of W over the
// corners. Both dominate their centre-gradient counterparts, so Young's
// inequality against |cell_gradient| holds cell by cell.

#include <array>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "gpc/double_well.hpp"
#include "gpc/field.hpp"

namespace gpc {

double allen_cahn_energy(const ScalarField& u, double eps, const DoubleWell& W);

/// L^2_gamma gradient of allen_cahn_energy: the exact derivative of the
/// discrete energy divided by the node weights. In the interior this is the
/// discretisation of -eps (Lap u - x.grad u) + W'(u)/eps.
ScalarField allen_cahn_gradient(const ScalarField& u, double eps, const DoubleWell& W);

/// The two halves of the energy: gradient part and potential part.
struct EnergySplit {
  double gradient;
  double potential;
};
EnergySplit allen_cahn_energy_split(const ScalarField& u, double eps, const DoubleWell& W);

/// sum_c w_c sqrt(2 mean_c W(u)) |G_c u|, the Young lower bound of F_eps(u)
/// for every eps.
double young_lower_bound(const ScalarField& u, const DoubleWell& W);

/// (int_delta^{1-delta} sqrt(2W)) * min over n_levels midpoint levels t in
/// [delta, 1-delta] of perimeter_gamma({u > t}).
double level_set_lower_bound(const ScalarField& u, const DoubleWell& W, double delta, int n_levels);

/// Shift-then-clip projection onto {0 <= u <= 1, int u dgamma = mass}: the
/// additive constant s with sum_i w_i clip(u_i + s, 0, 1) = mass is found by
/// bisection.
void project_mass(ScalarField& u, double mass);

struct AllenCahnResult {
  ScalarField u;
  double energy = 0.0;
  std::vector<double> energies;  ///< accepted iterates, starting with the projected init
  int steps = 0;
  bool converged = false;
};

/// Projected Barzilai-Borwein descent at fixed mass. Stops when an accepted
/// step decreases the energy by less than tol, or after max_steps.
/// Throws std::invalid_argument unless 0 < mass < 1 and eps > 0.
AllenCahnResult minimize_allen_cahn(double eps, double mass, const DoubleWell& W, const GridPtr& grid,
                                    const ScalarField& init, int max_steps, double tol);

// --- recovery sequence -------------------------------------------------------

/// Truncated transition profile eta_delta = H_delta^{-1}, where
/// H_delta(t) = int_0^t ds / sqrt(2 W_delta(s)) and W_delta replaces W by its
/// maximum alpha_delta on [0,delta] and [1-delta,1].
class Profile {
 public:
  std::vector<double> t;       ///< H_delta at the samples
  std::vector<double> values;  ///< eta samples, uniform in [0,1] plus delta and 1-delta
  std::vector<double> slopes;  ///< eta' = sqrt(2 W_delta(eta))
  bool monotone = true;

  double delta = 0.0;
  double plateau = 0.0;    ///< alpha_delta
  double length = 0.0;     ///< H_delta(1)
  double constant = 0.0;   ///< c_{W_delta} = int_0^1 sqrt(2 W_delta)

  double operator()(double s) const;
  double derivative(double s) const;
  /// H_delta(v) for v in [0,1].
  double inverse(double v) const;
  double truncated_well(double v) const;
  const DoubleWell& well() const { return *W_; }

 private:
  friend Profile recovery_profile(double delta, const DoubleWell& W, int samples);
  std::optional<DoubleWell> W_;
  double segment_integral(double a, double b) const;
};

/// Throws std::invalid_argument unless 0 < delta < 1/4, samples >= 16 and
/// W > 0 on (delta, 1-delta).
Profile recovery_profile(double delta, const DoubleWell& W, int samples = 2048);

/// E = {<h,x> < c} or E = {f < 0} for a smooth f.
struct SetDescriptor {
  enum class Kind { half_space, level_set };
  Kind kind = Kind::half_space;
  std::array<double, kMaxDim> h{1.0, 0.0, 0.0};
  double c = 0.0;
  std::function<double(const Point&)> f;

  static SetDescriptor half_space(std::span<const double> h, double c);
  static SetDescriptor level_set(std::function<double(const Point&)> f);
};

/// Euclidean distance to E at every node (0 on E). Level sets use the
/// brute-force minimum over the interpolated boundary crossings of the grid
/// edges.
ScalarField distance_to_set(const SetDescriptor& E, const GridPtr& grid);

/// u_eps = eta_delta(d(x, E) / eps). Vanishes on E and equals 1 at distance
/// >= eps * H_delta(1).
ScalarField recovery_sequence(const SetDescriptor& E, double eps, const Profile& profile,
                              const GridPtr& grid);
ScalarField recovery_sequence(const SetDescriptor& E, double eps, double delta, const GridPtr& grid,
                              const DoubleWell& W = DoubleWell::quartic());

// --- Gamma-convergence sweep -------------------------------------------------

struct SweepRow {
  double eps = 0.0;
  double energy = 0.0;
  double l2_norm = 0.0;
  double mass_residual = 0.0;
  double gradient_energy = 0.0;
  double potential_energy = 0.0;
  int steps = 0;
  bool converged = false;
  std::string status = "ok";
};

struct SweepResult {
  std::vector<SweepRow> rows;
  double well_constant = 0.0;      ///< c_W
  double limit = 0.0;              ///< c_W U(mass)
  ScalarField minimizer;           ///< last successful minimizer
};

struct SweepOptions {
  int max_steps = 20000;
  double tol = 1e-13;
  /// Initial field for the first eps; defaults to Phi((x_1 - a)/eps_0) with
  /// gamma({x_1 > a}) = mass.
  std::optional<ScalarField> init;
};

/// Runs minimize_allen_cahn over eps_list (positive, strictly decreasing),
/// warm-starting each eps from the previous minimizer. Per-eps failures are
/// recorded in the row status. Throws std::invalid_argument on a bad list or
/// mass.
SweepResult gamma_sweep(const std::vector<double>& eps_list, double mass, const DoubleWell& W,
                        const GridPtr& grid, const SweepOptions& options = {});

}  // namespace gpc
