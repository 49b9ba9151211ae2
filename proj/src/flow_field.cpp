#include "gelflow/flow_field.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "gelflow/errors.hpp"
#include "gelflow/parallel.hpp"

namespace gelflow {

FlowField::FlowField(int height, int width, double u0, double v0)
    : height_(height), width_(width) {
  if (height < 1 || width < 1) {
    throw InvalidInput("flow field dimensions must be positive, got " + std::to_string(height) +
                       "x" + std::to_string(width));
  }
  data_.resize(2 * static_cast<std::size_t>(height) * width);
  for (std::size_t p = 0; p < data_.size(); p += 2) {
    data_[p] = u0;
    data_[p + 1] = v0;
  }
}

FlowField upsample_flow(const FlowField& flow, int out_height, int out_width) {
  const int h = flow.height(), w = flow.width();
  FlowField out(out_height, out_width);
  parallel_rows(out_height, [&](int i) {
    const double sy = std::min(0.5 * i, static_cast<double>(h - 1));
    const int y0 = std::min(static_cast<int>(sy), h >= 2 ? h - 2 : 0);
    const int y1 = std::min(y0 + 1, h - 1);
    const double fy = sy - y0;
    for (int j = 0; j < out_width; ++j) {
      const double sx = std::min(0.5 * j, static_cast<double>(w - 1));
      const int x0 = std::min(static_cast<int>(sx), w >= 2 ? w - 2 : 0);
      const int x1 = std::min(x0 + 1, w - 1);
      const double fx = sx - x0;
      const double w00 = (1.0 - fy) * (1.0 - fx), w01 = (1.0 - fy) * fx;
      const double w10 = fy * (1.0 - fx), w11 = fy * fx;
      out.u(i, j) = 2.0 * (w00 * flow.u(y0, x0) + w01 * flow.u(y0, x1) + w10 * flow.u(y1, x0) +
                           w11 * flow.u(y1, x1));
      out.v(i, j) = 2.0 * (w00 * flow.v(y0, x0) + w01 * flow.v(y0, x1) + w10 * flow.v(y1, x0) +
                           w11 * flow.v(y1, x1));
    }
  });
  return out;
}

FlowField upsample_flow(const FlowField& flow) {
  return upsample_flow(flow, 2 * flow.height(), 2 * flow.width());
}

DecompositionField decompose(const FlowField& flow) {
  const int h = flow.height(), w = flow.width();
  if (h < 2 || w < 2) {
    throw InvalidInput("decompose requires a flow of at least 2x2, got " + std::to_string(h) +
                       "x" + std::to_string(w));
  }
  const std::size_t n = static_cast<std::size_t>(h) * w;
  DecompositionField d;
  d.height = h;
  d.width = w;
  d.eps_xx.resize(n);
  d.eps_yy.resize(n);
  d.eps_xy.resize(n);
  d.omega.resize(n);

  parallel_rows(h, [&](int y) {
    const int yn = std::min(y, h - 2);  // forward difference row, last row copies h-2
    for (int x = 0; x < w; ++x) {
      const int xn = std::min(x, w - 2);
      const double du_dx = flow.u(y, xn + 1) - flow.u(y, xn);
      const double dv_dy = flow.v(yn + 1, x) - flow.v(yn, x);
      const double du_dy = flow.u(yn + 1, x) - flow.u(yn, x);
      const double dv_dx = flow.v(y, xn + 1) - flow.v(y, xn);
      const std::size_t p = d.idx(y, x);
      d.eps_xx[p] = du_dx;
      d.eps_yy[p] = dv_dy;
      d.eps_xy[p] = 0.5 * (du_dy + dv_dx);
      d.omega[p] = 0.5 * (dv_dx - du_dy);
    }
  });
  return d;
}

RatioField deformation_ratio(const FlowField& flow) {
  const int h = flow.height(), w = flow.width();
  const std::size_t n = static_cast<std::size_t>(h) * w;
  RatioField out;
  out.height = h;
  out.width = w;
  out.rx.resize(n);
  out.ry.resize(n);
  out.r.resize(n);

  parallel_rows(h, [&](int yc) {
    for (int xc = 0; xc < w; ++xc) {
      // x' - x'_c = (x - x_c) + u(q) - u(c), so the slope fit reduces to
      // 1 + sum(dx * (u(q) - u(c))) / sum(dx^2) over the clipped window.
      double sxx = 0.0, sxu = 0.0, syy = 0.0, syv = 0.0;
      const double uc = flow.u(yc, xc), vc = flow.v(yc, xc);
      const int y0 = std::max(yc - 1, 0), y1 = std::min(yc + 1, h - 1);
      const int x0 = std::max(xc - 1, 0), x1 = std::min(xc + 1, w - 1);
      for (int y = y0; y <= y1; ++y) {
        for (int x = x0; x <= x1; ++x) {
          const double dx = x - xc, dy = y - yc;
          sxx += dx * dx;
          syy += dy * dy;
          sxu += dx * (flow.u(y, x) - uc);
          syv += dy * (flow.v(y, x) - vc);
        }
      }
      const std::size_t p = out.idx(yc, xc);
      out.rx[p] = sxx > 0.0 ? 1.0 + sxu / sxx : 1.0;
      out.ry[p] = syy > 0.0 ? 1.0 + syv / syy : 1.0;
      out.r[p] = out.rx[p] * out.ry[p];
    }
  });
  return out;
}

}  // namespace gelflow
