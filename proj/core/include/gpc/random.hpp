#pragma once

// Reproducible randomness for test corpora and experiments.
//
// xoshiro256** (Blackman & Vigna) seeded through splitmix64, so any
// implementation using the published constants reproduces the stream.

#include <array>
#include <cstdint>
#include <vector>

#include "gpc/field.hpp"

namespace gpc {

class Xoshiro256 {
 public:
  using result_type = std::uint64_t;

  explicit Xoshiro256(std::uint64_t seed = 0);

  std::uint64_t next();
  std::uint64_t operator()() { return next(); }
  static constexpr std::uint64_t min() { return 0; }
  static constexpr std::uint64_t max() { return ~std::uint64_t{0}; }

  /// Uniform on [0,1) with 53 random bits.
  double uniform();
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  /// Standard normal via Box-Muller (no cached second variate).
  double normal();

 private:
  std::array<std::uint64_t, 4> s_{};
};

/// splitmix64 step; exposed for deriving independent sub-seeds.
std::uint64_t splitmix64(std::uint64_t& state);

/// f(x) = sum_k a_k cos(<w_k, x> + theta_k): a smooth field whose spectrum is
/// supported in the ball |w| <= max_frequency.
struct BandLimitedField {
  int dim = 1;
  std::vector<Point> frequencies;
  std::vector<double> amplitudes;
  std::vector<double> phases;

  double operator()(const Point& x) const;
  Point gradient(const Point& x) const;
};

BandLimitedField random_band_limited(Xoshiro256& rng, int dim, int terms, double max_frequency);

/// Random set {f < t} for a band-limited f, binary on the grid nodes, with
/// threshold chosen so that the Gaussian volume lies in [0.15, 0.85].
ScalarField random_smooth_set(Xoshiro256& rng, const GridPtr& grid);

/// Random smooth field with values in (0,1): Phi(s f(x) + b).
ScalarField random_smooth_field(Xoshiro256& rng, const GridPtr& grid);

}  // namespace gpc
