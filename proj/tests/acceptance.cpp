// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <string>
#include <vector>

#include "gpc/allen_cahn.hpp"
#include "gpc/ehrhard.hpp"
#include "gpc/field.hpp"
#include "gpc/gaussian.hpp"
#include "gpc/random.hpp"
#include "gpc/relaxed.hpp"
#include "gpc_cli/experiments.hpp"

using namespace gpc;

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

struct Check {
  bool ok = true;
  std::string detail;

  void require(bool cond, const char* fmt, double a, double b) {
    char buf[160];
    std::snprintf(buf, sizeof buf, fmt, a, b);
    if (!detail.empty()) detail += "; ";
    detail += buf;
    if (!cond) {
      ok = false;
      detail += " [!]";
    }
  }
};

int failures = 0;

void criterion(int id, const char* name, double budget_seconds, const std::function<void(Check&)>& body) {
  Check c;
  const auto start = std::chrono::steady_clock::now();
  try {
    body(c);
  } catch (const std::exception& e) {
    c.ok = false;
    c.detail += std::string(" exception: ") + e.what();
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (budget_seconds > 0) c.require(secs < budget_seconds, "time %.2fs (budget %.0fs)", secs, budget_seconds);
  std::printf("%s %2d %s: %s\n", c.ok ? "PASS" : "FAIL", id, name, c.detail.c_str());
  std::fflush(stdout);
  if (!c.ok) ++failures;
}

std::vector<double> axis(int dim, int a) {
  std::vector<double> h(dim, 0.0);
  h[a] = 1.0;
  return h;
}

gpc::cli::ExperimentConfig config(gpc::cli::Experiment e) {
  gpc::cli::ExperimentConfig c;
  c.experiment = e;
  return c;
}

}  // namespace

int main() {
  criterion(1, "half-space perimeter oracle", 1.0, [](Check& c) {
    const auto g = build_grid(1, 6, 2048);
    double worst = 0.0;
    for (double off : {0.0, 0.5, 1.0}) {
      const double P = perimeter_gamma(half_space_indicator(axis(1, 0), off, g));
      worst = std::max(worst, std::abs(P / (kInvSqrt2Pi * std::exp(-off * off / 2)) - 1.0));
    }
    c.require(worst <= 0.01, "max rel error %.3g (tol %.2g)", worst, 0.01);
  });

  criterion(2, "rotation robustness", 5.0, [](Check& c) {
    const auto g = build_grid(2, 6, 256);
    double worst = 0.0;
    for (double theta : {0.3, M_PI / 4, 1.1, 2.0}) {
      const double h[2] = {std::cos(theta), std::sin(theta)};
      const double P = perimeter_gamma(half_space_indicator(h, 0.0, g));
      worst = std::max(worst, std::abs(P / kInvSqrt2Pi - 1.0));
    }
    c.require(worst <= 0.02, "max rel error %.3g (tol %.2g)", worst, 0.02);
  });

  // Criteria 3 and 4 share the same corpus of 200 sets.
  const auto g2 = build_grid(2, 6, 256);
  std::vector<ScalarField> corpus;
  criterion(3, "isoperimetric inequality", 60.0, [&](Check& c) {
    Xoshiro256 rng(0);
    double min_deficit = kInf;
    for (int i = 0; i < 200; ++i) {
      corpus.push_back(random_smooth_set(rng, g2));
      const ScalarField& E = corpus.back();
      min_deficit = std::min(min_deficit, perimeter_gamma(E) - isoperimetric_profile(volume_gamma(E)));
    }
    c.require(min_deficit >= -0.005, "min P - U(vol) %.3g (tol %.3g)", min_deficit, -0.005);
    double worst = 0.0;
    for (double off : {-0.8, 0.0, 0.6}) {
      const double h[2] = {0.6, 0.8};
      const ScalarField H = half_space_indicator(h, off, g2);
      const double U = isoperimetric_profile(volume_gamma(H));
      worst = std::max(worst, std::abs(perimeter_gamma(H) / U - 1.0));
    }
    c.require(worst <= 0.01, "half-space equality rel error %.3g (tol %.2g)", worst, 0.01);
  });

  criterion(4, "Ehrhard monotonicity", 0.0, [&](Check& c) {
    double max_inc = -kInf, max_vol = 0.0;
    for (const ScalarField& E : corpus) {
      for (int k : {1, 2}) {
        const ScalarField S = ehrhard_symmetrize_set(E, k);
        max_inc = std::max(max_inc, perimeter_gamma(S) - perimeter_gamma(E));
        max_vol = std::max(max_vol, std::abs(volume_gamma(S) - volume_gamma(E)));
      }
    }
    c.require(max_inc <= 0.005, "max perimeter increase %.3g (tol %.3g)", max_inc, 0.005);
    c.require(max_vol <= 1e-6, "max volume error %.3g (tol %.1g)", max_vol, 1e-6);
  });
  corpus.clear();

  criterion(5, "Ehrhard-set perimeter formula", 0.0, [](Check& c) {
    const auto g = build_grid(2, 6, 512);
    const auto g1 = g->with_dim(1);
    Xoshiro256 rng(5);
    double worst = 0.0;
    for (int i = 0; i < 20; ++i) {
      const double a = rng.uniform(0.3, 1.5), b = rng.uniform(-1.0, 1.0);
      const double amp = rng.uniform(0.0, 0.5), w = rng.uniform(0.5, 2.0);
      auto arg = [=](double x) { return a * x + b + amp * std::sin(w * x); };
      const auto v = sample(g1, [&](const Point& x) { return std_normal_cdf(arg(x[0])); });
      double expected = 0.0;
      for (std::size_t j = 0; j < g1->size(); ++j) {
        const double x = g1->coord(j, 0);
        const double dv = (a + amp * w * std::cos(w * x)) * std_normal_pdf(arg(x));
        expected += g1->weight(j) * std::hypot(isoperimetric_profile(v[j]), dv);
      }
      worst = std::max(worst, std::abs(perimeter_gamma(ehrhard_set(v, g)) / expected - 1.0));
    }
    c.require(worst <= 0.01, "max rel error %.3g (tol %.2g)", worst, 0.01);
  });

  criterion(6, "Polya-Szego", 0.0, [&](Check& c) {
    Xoshiro256 rng(6);
    double max_dir = -kInf, max_l2 = 0.0, max_contr = -kInf;
    std::vector<ScalarField> u, s;
    for (int i = 0; i < 50; ++i) {
      u.push_back(random_smooth_field(rng, g2));
      s.push_back(ehrhard_symmetrize_function(u.back(), 1, 64).field);
      max_dir = std::max(max_dir, dirichlet_energy(s.back()) - dirichlet_energy(u.back()));
      max_l2 = std::max(max_l2, std::abs(l2_norm(s.back()) - l2_norm(u.back())));
    }
    for (int i = 0; i < 50; ++i)
      for (int j = i + 1; j < 50; j += 7)
        max_contr = std::max(max_contr, l2_distance(s[i], s[j]) - l2_distance(u[i], u[j]));
    c.require(max_dir <= 0.01, "max Dirichlet increase %.3g (tol %.2g)", max_dir, 0.01);
    c.require(max_l2 <= 1e-3, "max L2 norm change %.3g (tol %.1g)", max_l2, 1e-3);
    c.require(max_contr <= 1e-3, "max contraction excess %.3g (tol %.1g)", max_contr, 1e-3);
  });

  criterion(7, "relaxation witness", 0.0, [](Check& c) {
    const auto g1 = build_grid(1, 6, 2048);
    const double F = relaxed_energy(ScalarField(g1, 0.5));
    c.require(std::abs(F - kInvSqrt2Pi) <= 1e-8, "|F(1/2) - 1/sqrt(2pi)| %.3g (tol %.1g)", std::abs(F - kInvSqrt2Pi),
              1e-8);
    auto cfg = config(gpc::cli::Experiment::relax_demo);
    const auto r = gpc::cli::run(cfg);
    const double per = r.summary.at("max_perimeter_rel_error").get<double>();
    const double gap = r.summary.at("max_pairing_gap").get<double>();
    const double l2 = r.summary.at("max_l2_distance_error").get<double>();
    c.require(per <= 0.01, "max P(E_n) rel error %.3g (tol %.2g)", per, 0.01);
    c.require(gap <= 1e-12, "max pairing gap %.3g (tol %.1g)", gap, 1e-12);
    c.require(l2 <= 1e-6, "max | ||chi - 1/2|| - 0.5 | %.3g (tol %.1g)", l2, 1e-6);
  });

  criterion(8, "duality", 30.0, [](Check& c) {
    const auto g = build_grid(1, 6, 2048);
    const auto u = sample(g, [](const Point& x) { return std_normal_cdf(x[0]); });
    const double F = relaxed_energy(u);
    const DualityResult d = duality_lower_bound(u, 500);
    const double gap = (F - d.value) / F;
    c.require(gap <= 0.05, "rel gap %.3g (tol %.2g)", gap, 0.05);
    double excess = d.value - F;
    Xoshiro256 rng(8);
    const auto g2d = build_grid(2, 6, 128);
    for (int i = 0; i < 5; ++i) {
      const auto v = random_smooth_field(rng, g2d);
      excess = std::max(excess, duality_lower_bound(v, 100).value - relaxed_energy(v));
    }
    c.require(excess <= 0.01, "max dual - primal %.3g (tol %.2g)", excess, 0.01);
  });

  criterion(9, "Gamma-sweep", 120.0, [](Check& c) {
    const DoubleWell W = DoubleWell::quartic();
    const double cw = well_constant(W);
    c.require(std::abs(cw - std::sqrt(2.0) / 6) <= 1e-8, "|c_W - sqrt2/6| %.3g (tol %.1g)",
              std::abs(cw - std::sqrt(2.0) / 6), 1e-8);
    const auto g = build_grid(1, 6, 2048);
    const SweepResult s = gamma_sweep({0.4, 0.2, 0.1, 0.05}, 0.5, W, g);
    bool monotone = true;
    for (std::size_t i = 0; i < s.rows.size(); ++i) {
      monotone = monotone && s.rows[i].status == "ok" && s.rows[i].converged;
      if (i > 0) monotone = monotone && s.rows[i].energy >= s.rows[i - 1].energy - 1e-9;
    }
    c.require(monotone, "energies nondecreasing and converged %.0f (want %.0f)", monotone, 1.0);
    const double rel = std::abs(s.rows.back().energy / 0.094031597257959381158 - 1.0);
    c.require(rel <= 0.1, "final rel error %.3g (tol %.2g)", rel, 0.1);
  });

  criterion(10, "recovery sequence", 0.0, [](Check& c) {
    const DoubleWell W = DoubleWell::quartic();
    const Profile p = recovery_profile(0.02, W);
    const auto g = build_grid(1, 6, 2048);
    const double h[1] = {1.0};
    const double F = allen_cahn_energy(recovery_sequence(SetDescriptor::half_space(h, 0.0), 0.05, p, g), 0.05, W);
    const double bound = p.constant * kInvSqrt2Pi * 1.03;
    c.require(F <= bound, "F_eps %.6g (bound %.6g)", F, bound);
    double residual = 0.0;
    for (int i = 1; i < 4000; ++i) {
      const double s = p.length * i / 4000.0;
      const double d = (p(s + 1e-6) - p(s - 1e-6)) / 2e-6;
      residual = std::max(residual, std::abs(d * d / 2 - p.truncated_well(p(s))));
    }
    c.require(residual <= 1e-4, "ODE residual %.3g (tol %.1g)", residual, 1e-4);
  });

  criterion(11, "coarea", 0.0, [&](Check& c) {
    double worst = 0.0, worst_w = 0.0;
    for (int dim : {1, 2}) {
      const auto g = dim == 1 ? build_grid(1, 6, 2048) : g2;
      Xoshiro256 rng(11 + dim);
      for (int i = 0; i < 50; ++i) {
        const auto u = random_smooth_field(rng, g);
        worst = std::max(worst, std::abs(coarea_total_variation(u, 256) / total_variation_gamma(u) - 1.0));
        if (i % 5 == 0) {
          const auto w = random_smooth_field(rng, g);
          const WeightedCoarea wc = weighted_coarea(u, w, 256);
          worst_w = std::max(worst_w, std::abs(wc.right / wc.left - 1.0));
        }
      }
    }
    c.require(worst <= 0.02, "max rel error %.3g (tol %.2g)", worst, 0.02);
    c.require(worst_w <= 0.03, "weighted max rel error %.3g (tol %.2g)", worst_w, 0.03);
  });

  criterion(12, "Allen-Cahn gradient", 0.0, [](Check& c) {
    const DoubleWell W = DoubleWell::quartic();
    Xoshiro256 rng(12);
    double worst = 0.0;
    for (int dim : {1, 2}) {
      const auto g = build_grid(dim, 6, dim == 1 ? 1024 : 96);
      for (int i = 0; i < 5; ++i) {
        const auto u = random_smooth_field(rng, g);
        const auto v = random_smooth_field(rng, g);
        for (double eps : {0.4, 0.05}) {
          const double analytic = weak_pairing(allen_cahn_gradient(u, eps, W), v);
          const double hstep = 1e-5;
          ScalarField up = u, um = u;
          for (std::size_t k = 0; k < u.size(); ++k) {
            up[k] += hstep * v[k];
            um[k] -= hstep * v[k];
          }
          const double fd = (allen_cahn_energy(up, eps, W) - allen_cahn_energy(um, eps, W)) / (2 * hstep);
          worst = std::max(worst, std::abs(analytic / fd - 1.0));
        }
      }
    }
    c.require(worst <= 1e-4, "max rel error %.3g (tol %.1g)", worst, 1e-4);
  });

  criterion(13, "Bernstein probe", 0.0, [](Check& c) {
    const auto r = gpc::cli::run(config(gpc::cli::Experiment::bernstein_probe));
    const double change = r.summary.at("min_change").get<double>();
    c.require(r.rows.size() == 100, "trials %.0f (want %.0f)", static_cast<double>(r.rows.size()), 100.0);
    c.require(change >= -0.005, "min perimeter change %.3g (tol %.3g)", change, -0.005);
  });

  criterion(14, "determinism", 0.0, [](Check& c) {
    using gpc::cli::Experiment;
    int identical = 0, total = 0;
    for (Experiment e : {Experiment::isoperimetry, Experiment::symmetrize, Experiment::duality_gap,
                         Experiment::gamma_sweep, Experiment::bernstein_probe}) {
      auto cfg = config(e);
      cfg.seed = 7;
      const auto a = gpc::cli::run(cfg);
      const auto b = gpc::cli::run(cfg);
      ++total;
      if (a.rows == b.rows && a.summary == b.summary && a.config == b.config) ++identical;
    }
    c.require(identical == total, "identical reruns %.0f of %.0f", identical, total);
  });

  std::printf("%s: %d criteria failed\n", failures ? "FAIL" : "PASS", failures);
  return failures ? 1 : 0;
}
