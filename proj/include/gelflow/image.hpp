#pragma once

#include <cstddef>
#include <utility>
#include <vector>

namespace gelflow {

// Row-major raster with interleaved channels (1 = grayscale, 3 = RGB).
// Photometric images hold intensities in [0,1]; the same container carries
// derived rasters (gradients, SSIM maps) whose values may leave that range.
class Image {
 public:
  Image() = default;
  Image(int height, int width, int channels, double fill = 0.0);

  int height() const { return height_; }
  int width() const { return width_; }
  int channels() const { return channels_; }
  std::size_t size() const { return data_.size(); }

  double& at(int y, int x, int c) {
    return data_[(static_cast<std::size_t>(y) * width_ + x) * channels_ + c];
  }
  double at(int y, int x, int c) const {
    return data_[(static_cast<std::size_t>(y) * width_ + x) * channels_ + c];
  }

  double* row(int y) { return data_.data() + static_cast<std::size_t>(y) * width_ * channels_; }
  const double* row(int y) const {
    return data_.data() + static_cast<std::size_t>(y) * width_ * channels_;
  }

  std::vector<double>& data() { return data_; }
  const std::vector<double>& data() const { return data_; }

  bool same_shape(const Image& other) const {
    return height_ == other.height_ && width_ == other.width_ && channels_ == other.channels_;
  }

  // Throws InvalidInput when a sample is non-finite or outside [0,1].
  // Loaders and renderers call this; derived rasters are exempt.
  void check_unit_range(const char* context) const;

 private:
  int height_ = 0;
  int width_ = 0;
  int channels_ = 0;
  std::vector<double> data_;
};

// Levels ordered fine to coarse; level 0 is the input image. Each coarser
// level is binomially low-passed and 2x decimated, dims = ceil(previous / 2).
struct ImagePyramid {
  std::vector<Image> levels;
  static constexpr int downscale_factor = 2;

  int level_count() const { return static_cast<int>(levels.size()); }
};

// Builds up to `levels` pyramid levels, clamping the depth so the coarsest
// level keeps both dimensions >= 4. Images smaller than 4x4 are rejected.
ImagePyramid build_pyramid(const Image& img, int levels);

// Central differences in the interior, one-sided at the borders, per channel.
// first = d/dx (columns), second = d/dy (rows).
std::pair<Image, Image> image_gradient(const Image& img);

// Bilinear interpolation with clamp-to-edge coordinates. Exact at integer
// coordinates. Throws InvalidInput on non-finite coordinates.
void bilinear_sample(const Image& img, double x, double y, double* out);
double bilinear_sample(const Image& img, double x, double y, int c);

// out(p) = img2 sampled at p + flow(p); the pseudo-first image.
class FlowField;
Image warp_backward(const Image& img2, const FlowField& flow);

namespace detail {

// Mirror index without edge repetition: -1 -> 1, n -> n-2. Valid for n >= 2
// and any i.
inline int reflect_index(int i, int n) {
  if (n == 1) return 0;
  const int period = 2 * (n - 1);
  i %= period;
  if (i < 0) i += period;
  return i < n ? i : period - i;
}

}  // namespace detail

}  // namespace gelflow
