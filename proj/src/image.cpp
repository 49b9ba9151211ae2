#include "gelflow/image.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "gelflow/errors.hpp"
#include "gelflow/flow_field.hpp"
#include "gelflow/parallel.hpp"

namespace gelflow {

Image::Image(int height, int width, int channels, double fill)
    : height_(height), width_(width), channels_(channels) {
  if (height < 2 || width < 2) {
    throw InvalidInput("image dimensions must be at least 2x2, got " + std::to_string(height) +
                       "x" + std::to_string(width));
  }
  if (channels != 1 && channels != 3) {
    throw InvalidInput("image must have 1 or 3 channels, got " + std::to_string(channels));
  }
  data_.assign(static_cast<std::size_t>(height) * width * channels, fill);
}

void Image::check_unit_range(const char* context) const {
  for (double v : data_) {
    if (!std::isfinite(v) || v < 0.0 || v > 1.0) {
      throw InvalidInput(std::string(context) + ": intensity " + std::to_string(v) +
                         " outside [0,1]");
    }
  }
}

namespace {

// 5-tap binomial [1,4,6,4,1]/16 along one axis with reflect padding,
// then keep every second sample starting at 0.
Image downsample_once(const Image& img) {
  const int h = img.height(), w = img.width(), ch = img.channels();
  const int oh = (h + 1) / 2, ow = (w + 1) / 2;
  static constexpr double k[5] = {1.0 / 16, 4.0 / 16, 6.0 / 16, 4.0 / 16, 1.0 / 16};

  Image horiz(h, ow, ch);
  parallel_rows(h, [&](int y) {
    for (int xo = 0; xo < ow; ++xo) {
      const int xc = 2 * xo;
      for (int c = 0; c < ch; ++c) {
        double acc = 0.0;
        for (int t = -2; t <= 2; ++t) {
          acc += k[t + 2] * img.at(y, detail::reflect_index(xc + t, w), c);
        }
        horiz.at(y, xo, c) = acc;
      }
    }
  });

  Image out(oh, ow, ch);
  parallel_rows(oh, [&](int yo) {
    const int yc = 2 * yo;
    for (int x = 0; x < ow; ++x) {
      for (int c = 0; c < ch; ++c) {
        double acc = 0.0;
        for (int t = -2; t <= 2; ++t) {
          acc += k[t + 2] * horiz.at(detail::reflect_index(yc + t, h), x, c);
        }
        out.at(yo, x, c) = acc;
      }
    }
  });
  return out;
}

}  // namespace

ImagePyramid build_pyramid(const Image& img, int levels) {
  if (img.height() < 4 || img.width() < 4) {
    throw InvalidInput("build_pyramid requires an image of at least 4x4, got " +
                       std::to_string(img.height()) + "x" + std::to_string(img.width()));
  }
  if (levels < 1) {
    throw InvalidInput("build_pyramid requires levels >= 1, got " + std::to_string(levels));
  }

  ImagePyramid pyr;
  pyr.levels.push_back(img);
  while (pyr.level_count() < levels) {
    const Image& prev = pyr.levels.back();
    const int nh = (prev.height() + 1) / 2, nw = (prev.width() + 1) / 2;
    if (nh < 4 || nw < 4) break;  // clamp depth, coarsest stays >= 4x4
    pyr.levels.push_back(downsample_once(prev));
  }
  return pyr;
}

std::pair<Image, Image> image_gradient(const Image& img) {
  const int h = img.height(), w = img.width(), ch = img.channels();
  Image gx(h, w, ch), gy(h, w, ch);
  parallel_rows(h, [&](int y) {
    const int ym = y > 0 ? y - 1 : 0;
    const int yp = y < h - 1 ? y + 1 : h - 1;
    const double sy = (y > 0 && y < h - 1) ? 0.5 : 1.0;
    for (int x = 0; x < w; ++x) {
      const int xm = x > 0 ? x - 1 : 0;
      const int xp = x < w - 1 ? x + 1 : w - 1;
      const double sx = (x > 0 && x < w - 1) ? 0.5 : 1.0;
      for (int c = 0; c < ch; ++c) {
        gx.at(y, x, c) = sx * (img.at(y, xp, c) - img.at(y, xm, c));
        gy.at(y, x, c) = sy * (img.at(yp, x, c) - img.at(ym, x, c));
      }
    }
  });
  return {std::move(gx), std::move(gy)};
}

void bilinear_sample(const Image& img, double x, double y, double* out) {
  if (!std::isfinite(x) || !std::isfinite(y)) {
    throw InvalidInput("bilinear_sample: non-finite coordinates");
  }
  const int w = img.width(), h = img.height(), ch = img.channels();
  x = std::clamp(x, 0.0, static_cast<double>(w - 1));
  y = std::clamp(y, 0.0, static_cast<double>(h - 1));
  const int x0 = std::min(static_cast<int>(x), w - 2);
  const int y0 = std::min(static_cast<int>(y), h - 2);
  const int x1 = x0 + 1;
  const int y1 = y0 + 1;
  const double fx = x - x0, fy = y - y0;
  for (int c = 0; c < ch; ++c) {
    const double top = (1.0 - fx) * img.at(y0, x0, c) + fx * img.at(y0, x1, c);
    const double bot = (1.0 - fx) * img.at(y1, x0, c) + fx * img.at(y1, x1, c);
    out[c] = (1.0 - fy) * top + fy * bot;
  }
}

double bilinear_sample(const Image& img, double x, double y, int c) {
  double px[3];
  bilinear_sample(img, x, y, px);
  return px[c];
}

Image warp_backward(const Image& img2, const FlowField& flow) {
  if (img2.height() != flow.height() || img2.width() != flow.width()) {
    throw InvalidInput("warp_backward: flow dims " + std::to_string(flow.height()) + "x" +
                       std::to_string(flow.width()) + " do not match image dims " +
                       std::to_string(img2.height()) + "x" + std::to_string(img2.width()));
  }
  const int h = img2.height(), w = img2.width(), ch = img2.channels();
  Image out(h, w, ch);
  parallel_rows(h, [&](int y) {
    double px[3];
    for (int x = 0; x < w; ++x) {
      bilinear_sample(img2, x + flow.u(y, x), y + flow.v(y, x), px);
      for (int c = 0; c < ch; ++c) out.at(y, x, c) = px[c];
    }
  });
  return out;
}

}  // namespace gelflow
