#pragma once

// Inner loops of the cell scheme. The gradient of the multilinear
// interpolant at a cell centre along axis a is the mean of the 2^(m-1)
// forward differences on the cell edges parallel to a.

#include <array>
#include <cmath>
#include <span>
#include <vector>

#include "gpc/grid.hpp"

namespace gpc::detail {

using CellVec = std::array<double, kMaxDim>;

inline CellVec cell_grad(const GaussianGrid& g, std::span<const double> u, std::size_t cell) {
  CellVec out{};
  const int m = g.dim();
  const auto off = g.corner_offsets();
  const double scale = 1.0 / (static_cast<double>(1 << (m - 1)) * g.spacing());
  for (int a = 0; a < m; ++a) {
    const std::size_t s = g.stride(a);
    double acc = 0.0;
    for (int k = 0; k < (1 << m); ++k) {
      if (k & (1 << a)) continue;
      const std::size_t lo = cell + off[static_cast<std::size_t>(k)];
      acc += u[lo + s] - u[lo];
    }
    out[static_cast<std::size_t>(a)] = acc * scale;
  }
  return out;
}

/// acc += G_c^T v  (adjoint of cell_grad for one cell).
inline void cell_grad_transpose_add(const GaussianGrid& g, std::size_t cell, const CellVec& v,
                                    std::vector<double>& acc) {
  const int m = g.dim();
  const auto off = g.corner_offsets();
  const double scale = 1.0 / (static_cast<double>(1 << (m - 1)) * g.spacing());
  for (int a = 0; a < m; ++a) {
    const double va = v[static_cast<std::size_t>(a)] * scale;
    if (va == 0.0) continue;
    const std::size_t s = g.stride(a);
    for (int k = 0; k < (1 << m); ++k) {
      if (k & (1 << a)) continue;
      const std::size_t lo = cell + off[static_cast<std::size_t>(k)];
      acc[lo + s] += va;
      acc[lo] -= va;
    }
  }
}

/// Sum over axes of the mean squared edge difference quotient. Unlike
/// norm2(cell_grad) it does not vanish on the checkerboard mode for m >= 2,
/// and by Jensen it dominates norm2(cell_grad).
inline double edge_norm2(const GaussianGrid& g, std::span<const double> u, std::size_t cell) {
  const int m = g.dim();
  const auto off = g.corner_offsets();
  const double scale = 1.0 / (static_cast<double>(1 << (m - 1)) * g.spacing() * g.spacing());
  double acc = 0.0;
  for (int a = 0; a < m; ++a) {
    const std::size_t s = g.stride(a);
    for (int k = 0; k < (1 << m); ++k) {
      if (k & (1 << a)) continue;
      const std::size_t lo = cell + off[static_cast<std::size_t>(k)];
      const double d = u[lo + s] - u[lo];
      acc += d * d;
    }
  }
  return acc * scale;
}

/// acc += coeff * d(edge_norm2)/du.
inline void edge_norm2_grad_add(const GaussianGrid& g, std::span<const double> u, std::size_t cell,
                                double coeff, std::vector<double>& acc) {
  const int m = g.dim();
  const auto off = g.corner_offsets();
  const double scale = 2.0 * coeff / (static_cast<double>(1 << (m - 1)) * g.spacing() * g.spacing());
  for (int a = 0; a < m; ++a) {
    const std::size_t s = g.stride(a);
    for (int k = 0; k < (1 << m); ++k) {
      if (k & (1 << a)) continue;
      const std::size_t lo = cell + off[static_cast<std::size_t>(k)];
      const double d = scale * (u[lo + s] - u[lo]);
      acc[lo + s] += d;
      acc[lo] -= d;
    }
  }
}

inline double cell_mean(const GaussianGrid& g, std::span<const double> u, std::size_t cell) {
  const auto off = g.corner_offsets();
  double acc = 0.0;
  for (std::size_t o : off) acc += u[cell + o];
  return acc / static_cast<double>(off.size());
}

inline double norm2(const CellVec& v, int m) {
  double s = 0.0;
  for (int a = 0; a < m; ++a) s += v[static_cast<std::size_t>(a)] * v[static_cast<std::size_t>(a)];
  return s;
}

inline double norm(const CellVec& v, int m) { return std::sqrt(norm2(v, m)); }

}  // namespace gpc::detail
