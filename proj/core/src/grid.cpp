#include "gpc/grid.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "gpc/gaussian.hpp"

namespace gpc {

namespace {
constexpr std::size_t kMaxNodes = std::size_t{1} << 24;
}

GridPtr GaussianGrid::build(int dim, double half_width, int points_per_axis) {
  if (dim < 1 || dim > kMaxDim)
    throw std::invalid_argument("build_grid: dim must be 1, 2 or 3 (got " + std::to_string(dim) +
                                ")");
  if (!(half_width >= 4.0) || !std::isfinite(half_width))
    throw std::invalid_argument("build_grid: half_width must be >= 4");
  if (points_per_axis < 16)
    throw std::invalid_argument("build_grid: points_per_axis must be >= 16");
  std::size_t total = 1;
  for (int a = 0; a < dim; ++a) {
    total *= static_cast<std::size_t>(points_per_axis);
    if (total > kMaxNodes)
      throw std::invalid_argument("build_grid: more than 2^24 nodes requested");
  }
  return GridPtr(new GaussianGrid(dim, half_width, points_per_axis));
}

GridPtr GaussianGrid::with_dim(int dim) const { return build(dim, half_width_, n_); }

GaussianGrid::GaussianGrid(int dim, double half_width, int n)
    : dim_(dim), half_width_(half_width), n_(n), spacing_(2.0 * half_width / (n - 1)) {
  const auto un = static_cast<std::size_t>(n);
  nodes_.resize(un);
  axis_weights_.resize(un);
  edge_weights_.resize(un - 1);
  for (std::size_t i = 0; i < un; ++i) nodes_[i] = -half_width + spacing_ * static_cast<double>(i);
  nodes_.back() = half_width;
  for (std::size_t i = 0; i < un; ++i) {
    const double end_factor = (i == 0 || i + 1 == un) ? 0.5 : 1.0;
    axis_weights_[i] = end_factor * spacing_ * std_normal_pdf(nodes_[i]);
    axis_total_ += axis_weights_[i];
  }
  for (std::size_t i = 0; i + 1 < un; ++i)
    edge_weights_[i] = 0.5 * spacing_ * (std_normal_pdf(nodes_[i]) + std_normal_pdf(nodes_[i + 1]));

  std::size_t total = 1;
  for (int a = dim - 1; a >= 0; --a) {
    strides_[static_cast<std::size_t>(a)] = total;
    total *= un;
  }

  weights_.assign(total, 1.0);
  for (std::size_t node = 0; node < total; ++node) {
    double w = 1.0;
    for (int a = 0; a < dim; ++a) w *= axis_weights_[static_cast<std::size_t>(axis_index(node, a))];
    weights_[node] = w;
  }
  // Fixed-order summation keeps totals reproducible.
  for (double w : weights_) total_weight_ += w;

  for (int corner = 0; corner < (1 << dim); ++corner) {
    std::size_t off = 0;
    for (int a = 0; a < dim; ++a)
      if (corner & (1 << a)) off += strides_[static_cast<std::size_t>(a)];
    corner_offsets_[static_cast<std::size_t>(corner)] = off;
  }

  for (std::size_t node = 0; node < total; ++node) {
    bool interior = true;
    double w = 1.0;
    for (int a = 0; a < dim && interior; ++a) {
      const int i = axis_index(node, a);
      if (i + 1 >= n) interior = false;
      else w *= edge_weights_[static_cast<std::size_t>(i)];
    }
    if (!interior) continue;
    cells_.push_back(node);
    cell_weights_.push_back(w);
  }
}

std::array<double, kMaxDim> GaussianGrid::point(std::size_t node) const {
  std::array<double, kMaxDim> x{};
  for (int a = 0; a < dim_; ++a) x[static_cast<std::size_t>(a)] = coord(node, a);
  return x;
}

std::array<double, kMaxDim> GaussianGrid::cell_center(std::size_t cell) const {
  std::array<double, kMaxDim> x{};
  for (int a = 0; a < dim_; ++a) x[static_cast<std::size_t>(a)] = coord(cell, a) + 0.5 * spacing_;
  return x;
}

}  // namespace gpc
