#pragma once

// Tensor-product discretization of (R^m, gamma_m) on the box [-L, L]^m.
//
// Nodes are uniform per axis and identical on every axis; node weights are
// the tensor product of the trapezoidal rule against the density
// exp(-x^2/2)/sqrt(2 pi). Flat node indices are row-major with axis 0
// slowest.
//
// A *cell* is the hypercube spanned by the node with multi-index i (all
// i_a <= n-2) and its 2^m forward neighbours. Cells are identified by the
// flat index of their lower corner and carry the weight
// prod_a (Delta/2)(phi(x_{i_a}) + phi(x_{i_a+1})), so the cell weights and
// the node weights have the same total.

#include <array>
#include <cstddef>
#include <memory>
#include <span>
#include <vector>

namespace gpc {

inline constexpr int kMaxDim = 3;
inline constexpr double kDefaultHalfWidth = 6.0;

class GaussianGrid;
using GridPtr = std::shared_ptr<const GaussianGrid>;

class GaussianGrid {
 public:
  /// Validates dim in {1,2,3}, half_width >= 4, points_per_axis >= 16 and a
  /// total node count of at most 2^24; throws std::invalid_argument.
  static GridPtr build(int dim, double half_width, int points_per_axis);

  /// A grid with the same axis discretization and a different dimension.
  GridPtr with_dim(int dim) const;

  int dim() const { return dim_; }
  double half_width() const { return half_width_; }
  int points_per_axis() const { return n_; }
  double spacing() const { return spacing_; }
  std::size_t size() const { return weights_.size(); }
  std::size_t stride(int axis) const { return strides_[static_cast<std::size_t>(axis)]; }

  std::span<const double> axis_nodes() const { return nodes_; }
  std::span<const double> axis_weights() const { return axis_weights_; }
  std::span<const double> edge_weights() const { return edge_weights_; }

  std::span<const double> weights() const { return weights_; }
  double weight(std::size_t node) const { return weights_[node]; }
  double total_weight() const { return total_weight_; }
  /// Total trapezoidal weight of one axis.
  double axis_total_weight() const { return axis_total_; }

  int axis_index(std::size_t node, int axis) const {
    return static_cast<int>((node / stride(axis)) % static_cast<std::size_t>(n_));
  }
  double coord(std::size_t node, int axis) const { return nodes_[axis_index(node, axis)]; }
  std::array<double, kMaxDim> point(std::size_t node) const;

  // Cells.
  std::span<const std::size_t> cells() const { return cells_; }
  std::span<const double> cell_weights() const { return cell_weights_; }
  /// Offsets of the 2^dim corners relative to the lower corner; bit a of the
  /// corner number selects the upper node along axis a.
  std::span<const std::size_t> corner_offsets() const {
    return {corner_offsets_.data(), std::size_t{1} << dim_};
  }
  int corner_count() const { return 1 << dim_; }
  /// Centre of the cell whose lower corner is `cell`.
  std::array<double, kMaxDim> cell_center(std::size_t cell) const;

  bool same_shape(const GaussianGrid& other) const {
    return dim_ == other.dim_ && n_ == other.n_ && half_width_ == other.half_width_;
  }
  bool same_axes(const GaussianGrid& other) const {
    return n_ == other.n_ && half_width_ == other.half_width_;
  }

 private:
  GaussianGrid(int dim, double half_width, int points_per_axis);

  int dim_;
  double half_width_;
  int n_;
  double spacing_;
  double axis_total_ = 0.0;
  double total_weight_ = 0.0;
  std::array<std::size_t, kMaxDim> strides_{};
  std::vector<double> nodes_;
  std::vector<double> axis_weights_;
  std::vector<double> edge_weights_;
  std::vector<double> weights_;
  std::vector<std::size_t> cells_;
  std::vector<double> cell_weights_;
  std::array<std::size_t, 1 << kMaxDim> corner_offsets_{};
};

/// build_grid: convenience wrapper over GaussianGrid::build.
inline GridPtr build_grid(int dim, double half_width, int points_per_axis) {
  return GaussianGrid::build(dim, half_width, points_per_axis);
}

}  // namespace gpc
