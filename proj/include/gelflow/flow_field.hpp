#pragma once

#include <cstddef>
#include <vector>

namespace gelflow {

// Per-pixel displacement (u, v) in pixels of the level it is attached to.
// u displaces along x (columns), v along y (rows); interleaved storage.
class FlowField {
 public:
  FlowField() = default;
  FlowField(int height, int width, double u0 = 0.0, double v0 = 0.0);

  int height() const { return height_; }
  int width() const { return width_; }
  std::size_t pixel_count() const { return static_cast<std::size_t>(height_) * width_; }

  double& u(int y, int x) { return data_[idx(y, x)]; }
  double u(int y, int x) const { return data_[idx(y, x)]; }
  double& v(int y, int x) { return data_[idx(y, x) + 1]; }
  double v(int y, int x) const { return data_[idx(y, x) + 1]; }

  std::vector<double>& data() { return data_; }
  const std::vector<double>& data() const { return data_; }

  bool same_shape(const FlowField& other) const {
    return height_ == other.height_ && width_ == other.width_;
  }

 private:
  std::size_t idx(int y, int x) const {
    return 2 * (static_cast<std::size_t>(y) * width_ + x);
  }

  int height_ = 0;
  int width_ = 0;
  std::vector<double> data_;
};

// Pointwise velocity-decomposition rates: eps_xx = du/dx, eps_yy = dv/dy,
// eps_xy = (du/dy + dv/dx)/2, omega = (dv/dx - du/dy)/2.
struct DecompositionField {
  int height = 0;
  int width = 0;
  std::vector<double> eps_xx, eps_yy, eps_xy, omega;

  std::size_t idx(int y, int x) const {
    return static_cast<std::size_t>(y) * width + x;
  }
};

// Local length-change ratios from the 3x3 window fit; r = rx * ry per pixel.
struct RatioField {
  int height = 0;
  int width = 0;
  std::vector<double> rx, ry, r;

  std::size_t idx(int y, int x) const {
    return static_cast<std::size_t>(y) * width + x;
  }
};

// Bilinear upsampling to (out_height, out_width): output (i, j) samples the
// source at (j/2, i/2) with clamping, and displacement values are doubled.
FlowField upsample_flow(const FlowField& flow, int out_height, int out_width);
FlowField upsample_flow(const FlowField& flow);  // doubled dims

// Forward differences (p+1 minus p); the last column of d/dx and last row of
// d/dy are copied from their neighbors.
DecompositionField decompose(const FlowField& flow);

// Least-squares fit of the per-axis stretch over each clipped 3x3 window of
// warped positions. Degenerate windows fall back to ratio 1.
RatioField deformation_ratio(const FlowField& flow);

}  // namespace gelflow
