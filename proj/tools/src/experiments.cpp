#include "gpc_cli/experiments.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <vector>

#include "gpc/allen_cahn.hpp"
#include "gpc/ehrhard.hpp"
#include "gpc/gaussian.hpp"
#include "gpc/random.hpp"
#include "gpc/relaxed.hpp"

#ifndef GPC_VERSION
#define GPC_VERSION "unknown"
#endif

namespace gpc::cli {

namespace {

constexpr int kRandomSets = 20;
constexpr int kRandomFunctions = 10;
constexpr int kDualIterations = 500;
constexpr int kCurvatureSteps = 12000;
constexpr int kBernsteinTrials = 100;
constexpr double kBernsteinSlack = 0.005;

std::vector<double> unit_axis(int dim, int axis) {
  std::vector<double> h(static_cast<std::size_t>(dim), 0.0);
  h[static_cast<std::size_t>(axis)] = 1.0;
  return h;
}

std::vector<double> diagonal(int dim) {
  std::vector<double> h(static_cast<std::size_t>(dim), 1.0 / std::sqrt(static_cast<double>(dim)));
  return h;
}

// --- isoperimetry ------------------------------------------------------------

void run_isoperimetry(const ExperimentConfig& c, const GridPtr& grid, ExperimentReport& r) {
  const int m = grid->dim();
  double max_half_err = 0.0;
  double min_deficit = std::numeric_limits<double>::infinity();

  std::vector<std::pair<std::string, std::vector<double>>> normals{{"half_space_axis", unit_axis(m, 0)}};
  if (m > 1) normals.emplace_back("half_space_tilted", diagonal(m));
  int index = 0;
  for (const auto& [kind, h] : normals) {
    for (double offset : {0.0, 0.5, 1.0}) {
      const ScalarField E = half_space_indicator(h, offset, grid);
      const double vol = volume_gamma(E);
      const double P = perimeter_gamma(E);
      const double exact = half_space_perimeter_exact(offset, 1.0);
      const double err = P / exact - 1.0;
      max_half_err = std::max(max_half_err, std::abs(err));
      Json row;
      row["kind"] = kind;
      row["index"] = index++;
      row["offset"] = offset;
      row["volume"] = vol;
      row["perimeter"] = P;
      row["reference"] = exact;
      row["deficit"] = P - isoperimetric_profile(std::clamp(vol, 0.0, 1.0));
      row["rel_error"] = err;
      r.add_row(std::move(row));
    }
  }

  Xoshiro256 rng(c.seed);
  for (int i = 0; i < kRandomSets; ++i) {
    const ScalarField E = random_smooth_set(rng, grid);
    const double vol = std::clamp(volume_gamma(E), 0.0, 1.0);
    const double P = perimeter_gamma(E);
    const double U = isoperimetric_profile(vol);
    min_deficit = std::min(min_deficit, P - U);
    Json row;
    row["kind"] = "random";
    row["index"] = index++;
    row["offset"] = std_normal_quantile(std::clamp(vol, 1e-300, 1.0 - 1e-16));
    row["volume"] = vol;
    row["perimeter"] = P;
    row["reference"] = U;
    row["deficit"] = P - U;
    row["rel_error"] = P / U - 1.0;
    r.add_row(std::move(row));
  }
  r.summary["max_half_space_rel_error"] = max_half_err;
  r.summary["min_random_deficit"] = min_deficit;
  r.summary["random_sets"] = kRandomSets;
}

// --- symmetrize --------------------------------------------------------------

void run_symmetrize(const ExperimentConfig& c, const GridPtr& grid, ExperimentReport& r) {
  const int m = grid->dim();
  Xoshiro256 rng(c.seed);
  double max_vol_err = 0.0, max_per_inc = -std::numeric_limits<double>::infinity();
  double max_l2_err = 0.0, max_dir_inc = -std::numeric_limits<double>::infinity();
  double max_contraction = -std::numeric_limits<double>::infinity();
  int index = 0;

  for (int i = 0; i < kRandomSets; ++i) {
    const ScalarField E = random_smooth_set(rng, grid);
    const double vol = volume_gamma(E);
    const double P = perimeter_gamma(E);
    for (int k : {1, m}) {
      const ScalarField S = ehrhard_symmetrize_set(E, k);
      const double vol_s = volume_gamma(S);
      const double P_s = perimeter_gamma(S);
      max_vol_err = std::max(max_vol_err, std::abs(vol_s - vol));
      max_per_inc = std::max(max_per_inc, P_s - P);
      Json row;
      row["kind"] = "set";
      row["index"] = index++;
      row["k"] = k;
      row["volume_before"] = vol;
      row["volume_after"] = vol_s;
      row["energy_before"] = P;
      row["energy_after"] = P_s;
      row["l2_before"] = l2_norm(E);
      row["l2_after"] = l2_norm(S);
      r.add_row(std::move(row));
    }
  }

  std::vector<ScalarField> originals, symmetrals;
  for (int i = 0; i < kRandomFunctions; ++i) {
    ScalarField u = random_smooth_field(rng, grid);
    SymmetrizedFunction s = ehrhard_symmetrize_function(u, 1, c.n_levels);
    const double l2 = l2_norm(u), l2_s = l2_norm(s.field);
    const double D = dirichlet_energy(u), D_s = dirichlet_energy(s.field);
    max_l2_err = std::max(max_l2_err, std::abs(l2_s - l2));
    max_dir_inc = std::max(max_dir_inc, D_s - D);
    Json row;
    row["kind"] = "function";
    row["index"] = index++;
    row["k"] = 1;
    row["volume_before"] = integrate(u);
    row["volume_after"] = integrate(s.field);
    row["energy_before"] = D;
    row["energy_after"] = D_s;
    row["l2_before"] = l2;
    row["l2_after"] = l2_s;
    r.add_row(std::move(row));
    originals.push_back(std::move(u));
    symmetrals.push_back(std::move(s.field));
  }
  for (std::size_t i = 1; i < originals.size(); ++i)
    max_contraction = std::max(max_contraction, l2_distance(symmetrals[i], symmetrals[i - 1]) -
                                                    l2_distance(originals[i], originals[i - 1]));

  r.summary["max_volume_error"] = max_vol_err;
  r.summary["max_perimeter_increase"] = max_per_inc;
  r.summary["max_l2_error"] = max_l2_err;
  r.summary["max_dirichlet_increase"] = max_dir_inc;
  r.summary["max_contraction_excess"] = max_contraction;
}

// --- relax-demo --------------------------------------------------------------

std::vector<std::function<double(const Point&)>> dictionary(int dim, int skip_axis) {
  std::vector<std::function<double(const Point&)>> out;
  out.emplace_back([](const Point&) { return 1.0; });
  for (int a = 0; a < dim; ++a) {
    if (a == skip_axis) continue;
    const auto i = static_cast<std::size_t>(a);
    out.emplace_back([i](const Point& x) { return x[i]; });
    out.emplace_back([i](const Point& x) { return x[i] * x[i] - 1.0; });
    out.emplace_back([i](const Point& x) { return std::cos(x[i]); });
    out.emplace_back([i](const Point& x) { return std::sin(2.0 * x[i]); });
    for (int b = a + 1; b < dim; ++b) {
      if (b == skip_axis) continue;
      const auto j = static_cast<std::size_t>(b);
      out.emplace_back([i, j](const Point& x) { return x[i] * x[j]; });
    }
  }
  return out;
}

void run_relax_demo(const ExperimentConfig&, const GridPtr& grid, ExperimentReport& r) {
  const int m = grid->dim();
  const ScalarField half(grid, 0.5);
  const double relaxed_half = relaxed_energy(half);
  double max_gap = 0.0, max_per_err = 0.0, max_l2_err = 0.0;
  for (int n = 0; n < m; ++n) {
    const ScalarField E = half_space_indicator(unit_axis(m, n), 0.0, grid);
    double gap = 0.0;
    const auto dict = dictionary(m, n);
    for (const auto& psi : dict) {
      const ScalarField f = sample(grid, psi);
      gap = std::max(gap, std::abs(weak_pairing(E, f) - weak_pairing(half, f)));
    }
    const double P = perimeter_gamma(E);
    const double dist = l2_distance(E, half);
    max_gap = std::max(max_gap, gap);
    max_per_err = std::max(max_per_err, std::abs(P / kInvSqrt2Pi - 1.0));
    max_l2_err = std::max(max_l2_err, std::abs(dist - 0.5));
    Json row;
    row["axis"] = n + 1;
    row["perimeter"] = P;
    row["relaxed_energy"] = relaxed_energy(E);
    row["l2_distance_to_half"] = dist;
    row["dictionary_size"] = static_cast<int>(dict.size());
    row["max_pairing_gap"] = gap;
    r.add_row(std::move(row));
  }
  r.summary["relaxed_energy_half"] = relaxed_half;
  r.summary["reference"] = kInvSqrt2Pi;
  r.summary["max_perimeter_rel_error"] = max_per_err;
  r.summary["max_pairing_gap"] = max_gap;
  r.summary["max_l2_distance_error"] = max_l2_err;
}

// --- duality-gap -------------------------------------------------------------

void run_duality_gap(const ExperimentConfig& c, const GridPtr& grid, ExperimentReport& r) {
  std::vector<std::pair<std::string, ScalarField>> fields;
  for (double s : {1.0, 2.0, 0.5}) {
    fields.emplace_back("smooth_phi_" + format_double(s),
                        sample(grid, [s](const Point& x) { return std_normal_cdf(s * x[0]); }));
  }
  fields.emplace_back("constant_half", ScalarField(grid, 0.5));
  fields.emplace_back("half_space", half_space_indicator(unit_axis(grid->dim(), 0), 0.0, grid));
  Xoshiro256 rng(c.seed);
  for (int i = 0; i < 3; ++i) fields.emplace_back("random_" + std::to_string(i), random_smooth_field(rng, grid));

  double max_smooth_gap = 0.0;
  double max_excess = -std::numeric_limits<double>::infinity();
  for (const auto& [name, u] : fields) {
    const double F = relaxed_energy(u);
    const DualityResult d = duality_lower_bound(u, kDualIterations);
    const double rel = (F - d.value) / F;
    if (name.rfind("smooth_", 0) == 0) max_smooth_gap = std::max(max_smooth_gap, rel);
    max_excess = std::max(max_excess, d.value - F);
    Json row;
    row["field"] = name;
    row["relaxed_energy"] = F;
    row["dual_value"] = d.value;
    row["gap"] = F - d.value;
    row["rel_gap"] = rel;
    row["iterations"] = kDualIterations;
    r.add_row(std::move(row));
  }
  r.summary["max_rel_gap_smooth"] = max_smooth_gap;
  r.summary["max_dual_excess"] = max_excess;
}

// --- gamma-sweep -------------------------------------------------------------

void run_gamma_sweep(const ExperimentConfig& c, const GridPtr& grid, ExperimentReport& r) {
  const DoubleWell W = DoubleWell::quartic();
  const SweepResult sweep = gamma_sweep(c.eps_list, c.mass, W, grid);
  const Profile profile = recovery_profile(c.delta, W);
  const SetDescriptor E = SetDescriptor::half_space(unit_axis(grid->dim(), 0), std_normal_quantile(c.mass));
  const double U = isoperimetric_profile(c.mass);

  bool nondecreasing = true;
  double prev = -std::numeric_limits<double>::infinity();
  for (const SweepRow& s : sweep.rows) {
    const bool ok = s.status == "ok";
    if (ok && s.energy < prev) nondecreasing = false;
    if (ok) prev = s.energy;
    Json row;
    row["eps"] = s.eps;
    row["energy"] = s.energy;
    row["gradient_energy"] = s.gradient_energy;
    row["potential_energy"] = s.potential_energy;
    row["l2_norm"] = s.l2_norm;
    row["mass_residual"] = s.mass_residual;
    row["steps"] = s.steps;
    row["converged"] = s.converged;
    row["recovery_energy"] = allen_cahn_energy(recovery_sequence(E, s.eps, profile, grid), s.eps, W);
    row["status"] = s.status;
    r.add_row(std::move(row));
  }
  const SweepRow& last = sweep.rows.back();
  r.summary["well_constant"] = sweep.well_constant;
  r.summary["well_constant_delta"] = profile.constant;
  r.summary["limit"] = sweep.limit;
  r.summary["recovery_bound"] = profile.constant * U;
  r.summary["final_energy"] = last.energy;
  r.summary["final_rel_error"] = last.energy / sweep.limit - 1.0;
  r.summary["energies_nondecreasing"] = nondecreasing;
  if (sweep.minimizer.grid) {
    r.summary["young_bound"] = young_lower_bound(sweep.minimizer, W);
    r.summary["level_set_bound"] = level_set_lower_bound(sweep.minimizer, W, c.delta, c.n_levels);
    r.field = sweep.minimizer;
  }
  if (last.status != "ok") throw std::runtime_error("gamma-sweep: last eps failed (" + last.status + ")");
}

// --- curvature ---------------------------------------------------------------

void run_curvature(const ExperimentConfig&, const GridPtr& grid, ExperimentReport& r) {
  struct Case {
    std::string name;
    double parameter;
  };
  // constant -0.5 has global minimizer u = 1, but u = 0 is a strict local
  // minimum (U(s) ~ s sqrt(2 log 1/s) beats 0.5 s) and the descent from 1/4
  // lands there; the row is kept and excluded from the error summary.
  const std::vector<Case> cases{
      {"linear", 2.0}, {"linear", 3.0}, {"constant", 0.0}, {"constant", 0.5}, {"constant", -0.5}};
  const ScalarField lower = half_space_indicator(unit_axis(grid->dim(), 0), 0.0, grid);
  double max_energy_err = 0.0;
  for (const Case& cs : cases) {
    const double p = cs.parameter;
    const bool linear = cs.name == "linear";
    const ScalarField g = linear ? sample(grid, [p](const Point& x) { return p * x[0]; }) : ScalarField(grid, p);
    ScalarField expected_u = linear ? lower : ScalarField(grid, p >= 0.0 ? 0.0 : 1.0);
    const double expected = linear ? (1.0 - p) * kInvSqrt2Pi : std::min(p, 0.0) * grid->total_weight();

    const CurvatureResult res = minimize_prescribed_curvature(g, kCurvatureSteps, {});
    const double energy = prescribed_curvature_energy(res.u, g);
    if (p >= 0.0) max_energy_err = std::max(max_energy_err, std::abs(energy - expected));
    Json row;
    row["case"] = cs.name;
    row["parameter"] = p;
    row["energy_initial"] = res.energies.empty() ? energy : res.energies.front();
    row["energy_final"] = energy;
    row["expected_energy"] = expected;
    row["volume"] = volume_gamma(res.u);
    row["l2_distance_to_expected"] = l2_distance(res.u, expected_u);
    row["accepted_steps"] = res.accepted_steps;
    r.add_row(std::move(row));
    r.field = res.u;
  }
  r.summary["max_energy_error"] = max_energy_err;
}

// --- bernstein-probe ---------------------------------------------------------

void run_bernstein_probe(const ExperimentConfig& c, const GridPtr& grid, ExperimentReport& r) {
  const int m = grid->dim();
  const ScalarField base = half_space_indicator(unit_axis(m, 0), 0.0, grid);
  const double vol = volume_gamma(base);
  const double P0 = perimeter_gamma(base);
  Xoshiro256 rng(c.seed);
  double min_change = std::numeric_limits<double>::infinity(), max_vol_err = 0.0;
  for (int i = 0; i < kBernsteinTrials; ++i) {
    const BandLimitedField b = random_band_limited(rng, m, 6, 1.2);
    const double amplitude = rng.uniform(0.02, 0.5);
    const ScalarField f = sample(grid, [&](const Point& x) { return x[0] + amplitude * b(x); });
    const ScalarField E = volume_sublevel_set(f, vol, true);
    const double P = perimeter_gamma(E);
    const double v = volume_gamma(E);
    min_change = std::min(min_change, P - P0);
    max_vol_err = std::max(max_vol_err, std::abs(v - vol));
    Json row;
    row["index"] = i;
    row["amplitude"] = amplitude;
    row["volume"] = v;
    row["perimeter"] = P;
    row["change"] = P - P0;
    r.add_row(std::move(row));
  }
  r.summary["base_perimeter"] = P0;
  r.summary["min_change"] = min_change;
  r.summary["max_volume_error"] = max_vol_err;
  r.summary["slack"] = kBernsteinSlack;
  r.summary["stationary"] = min_change >= -kBernsteinSlack;
}

}  // namespace

ExperimentReport run(const ExperimentConfig& config) {
  validate(config);
  const ExperimentConfig c = resolved(config);
  const auto start = std::chrono::steady_clock::now();
  const GridPtr grid = build_grid(*c.dim, c.half_width, *c.grid_n);

  ExperimentReport r;
  r.config = config_json(c);
  switch (c.experiment) {
    case Experiment::isoperimetry:
      run_isoperimetry(c, grid, r);
      break;
    case Experiment::symmetrize:
      run_symmetrize(c, grid, r);
      break;
    case Experiment::relax_demo:
      run_relax_demo(c, grid, r);
      break;
    case Experiment::duality_gap:
      run_duality_gap(c, grid, r);
      break;
    case Experiment::gamma_sweep:
      run_gamma_sweep(c, grid, r);
      break;
    case Experiment::curvature:
      run_curvature(c, grid, r);
      break;
    case Experiment::bernstein_probe:
      run_bernstein_probe(c, grid, r);
      break;
  }
  const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
  r.provenance["library"] = std::string("gpc ") + GPC_VERSION;
  r.provenance["duration_seconds"] = elapsed.count();
  return r;
}

}  // namespace gpc::cli
