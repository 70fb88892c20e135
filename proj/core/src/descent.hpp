#pragma once

// Projected gradient descent in the L^2_gamma metric with Barzilai-Borwein
// steps and step halving whenever the energy would increase, so accepted
// iterates have non-increasing energy.

#include <algorithm>
#include <cmath>
#include <functional>
#include <span>
#include <vector>

namespace gpc::detail {

struct DescentProblem {
  std::function<double(const std::vector<double>&)> energy;
  /// L^2_gamma gradient (Euclidean gradient divided by node weights).
  std::function<void(const std::vector<double>&, std::vector<double>&)> gradient;
  std::function<void(std::vector<double>&)> project;
  std::span<const double> weights;
};

struct DescentResult {
  std::vector<double> x;
  std::vector<double> energies;
  int accepted = 0;
  bool converged = false;
};

inline double weighted_dot(std::span<const double> w, const std::vector<double>& a,
                           const std::vector<double>& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += w[i] * a[i] * b[i];
  return s;
}

inline DescentResult projected_descent(const DescentProblem& p, std::vector<double> x, int max_steps,
                                       double tol, double initial_step) {
  DescentResult out;
  if (max_steps <= 0) {
    out.x = std::move(x);
    return out;
  }
  p.project(x);
  double energy = p.energy(x);
  std::vector<double> grad(x.size()), trial(x.size()), trial_grad(x.size());
  std::vector<double> s(x.size()), y(x.size());
  p.gradient(x, grad);
  double step = initial_step;
  out.energies.push_back(energy);

  for (int it = 0; it < max_steps; ++it) {
    double trial_energy = 0.0;
    bool accepted = false;
    while (step > 1e-300) {
      for (std::size_t i = 0; i < x.size(); ++i) trial[i] = x[i] - step * grad[i];
      p.project(trial);
      trial_energy = p.energy(trial);
      if (trial_energy <= energy) {
        accepted = true;
        break;
      }
      step *= 0.5;
    }
    if (!accepted) {
      out.converged = true;
      break;
    }
    p.gradient(trial, trial_grad);
    for (std::size_t i = 0; i < x.size(); ++i) {
      s[i] = trial[i] - x[i];
      y[i] = trial_grad[i] - grad[i];
    }
    const double sy = weighted_dot(p.weights, s, y);
    const double ss = weighted_dot(p.weights, s, s);
    step = (sy > 0.0 && ss > 0.0) ? ss / sy : 2.0 * step;
    step = std::clamp(step, 1e-14, 1e6);

    const double decrease = energy - trial_energy;
    x.swap(trial);
    grad.swap(trial_grad);
    energy = trial_energy;
    ++out.accepted;
    out.energies.push_back(energy);
    if (decrease < tol) {
      out.converged = true;
      break;
    }
  }
  out.x = std::move(x);
  return out;
}

}  // namespace gpc::detail
