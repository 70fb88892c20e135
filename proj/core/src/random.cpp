#include "gpc/random.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "gpc/gaussian.hpp"

namespace gpc {

namespace {
inline std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }
constexpr double kTwoPi = 6.283185307179586476925;
}  // namespace

std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

Xoshiro256::Xoshiro256(std::uint64_t seed) {
  std::uint64_t state = seed;
  for (auto& word : s_) word = splitmix64(state);
}

std::uint64_t Xoshiro256::next() {
  const std::uint64_t result = rotl(s_[1] * 5, 7) * 9;
  const std::uint64_t t = s_[1] << 17;
  s_[2] ^= s_[0];
  s_[3] ^= s_[1];
  s_[1] ^= s_[2];
  s_[0] ^= s_[3];
  s_[2] ^= t;
  s_[3] = rotl(s_[3], 45);
  return result;
}

double Xoshiro256::uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

double Xoshiro256::normal() {
  double u1 = uniform();
  while (u1 <= 0.0) u1 = uniform();
  const double u2 = uniform();
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(kTwoPi * u2);
}

double BandLimitedField::operator()(const Point& x) const {
  double sum = 0.0;
  for (std::size_t k = 0; k < amplitudes.size(); ++k) {
    double arg = phases[k];
    for (int a = 0; a < dim; ++a) arg += frequencies[k][static_cast<std::size_t>(a)] * x[static_cast<std::size_t>(a)];
    sum += amplitudes[k] * std::cos(arg);
  }
  return sum;
}

Point BandLimitedField::gradient(const Point& x) const {
  Point g{};
  for (std::size_t k = 0; k < amplitudes.size(); ++k) {
    double arg = phases[k];
    for (int a = 0; a < dim; ++a) arg += frequencies[k][static_cast<std::size_t>(a)] * x[static_cast<std::size_t>(a)];
    const double s = -amplitudes[k] * std::sin(arg);
    for (int a = 0; a < dim; ++a) g[static_cast<std::size_t>(a)] += s * frequencies[k][static_cast<std::size_t>(a)];
  }
  return g;
}

BandLimitedField random_band_limited(Xoshiro256& rng, int dim, int terms, double max_frequency) {
  if (dim < 1 || dim > kMaxDim || terms < 1 || !(max_frequency > 0.0))
    throw std::invalid_argument("random_band_limited: invalid arguments");
  BandLimitedField f;
  f.dim = dim;
  const double amp_scale = 1.0 / std::sqrt(static_cast<double>(terms));
  for (int k = 0; k < terms; ++k) {
    Point dir{};
    double norm = 0.0;
    do {
      norm = 0.0;
      for (int a = 0; a < dim; ++a) {
        dir[static_cast<std::size_t>(a)] = rng.normal();
        norm += dir[static_cast<std::size_t>(a)] * dir[static_cast<std::size_t>(a)];
      }
    } while (norm < 1e-12);
    norm = std::sqrt(norm);
    const double radius = rng.uniform(0.2 * max_frequency, max_frequency);
    for (int a = 0; a < dim; ++a) dir[static_cast<std::size_t>(a)] *= radius / norm;
    f.frequencies.push_back(dir);
    f.amplitudes.push_back(amp_scale * rng.uniform(0.5, 1.5));
    f.phases.push_back(rng.uniform(0.0, kTwoPi));
  }
  return f;
}

ScalarField random_smooth_set(Xoshiro256& rng, const GridPtr& grid) {
  const BandLimitedField f = random_band_limited(rng, grid->dim(), 6, 1.2);
  const double target = rng.uniform(0.15, 0.85);
  return volume_sublevel_set(sample(grid, [&](const Point& x) { return f(x); }), target, false);
}

ScalarField random_smooth_field(Xoshiro256& rng, const GridPtr& grid) {
  const BandLimitedField f = random_band_limited(rng, grid->dim(), 6, 1.2);
  const double scale = rng.uniform(0.5, 2.0);
  const double shift = rng.uniform(-0.5, 0.5);
  return sample(grid, [&](const Point& x) { return std_normal_cdf(scale * f(x) + shift); });
}

}  // namespace gpc
