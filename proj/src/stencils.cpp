#include "gelflow/stencils.hpp"

#include <cstddef>

#include "gelflow/parallel.hpp"

namespace gelflow {

namespace {

inline std::size_t at(int y, int x, int w) {
  return static_cast<std::size_t>(y) * w + x;
}

constexpr double kThird = 1.0 / 3.0;

}  // namespace

void diff_x(const std::vector<double>& f, int h, int w, std::vector<double>& out) {
  out.resize(f.size());
  parallel_rows(h, [&](int i) {
    for (int j = 0; j < w - 1; ++j) {
      out[at(i, j, w)] = f[at(i, j + 1, w)] - f[at(i, j, w)];
    }
    out[at(i, w - 1, w)] = out[at(i, w - 2, w)];
  });
}

void diff_y(const std::vector<double>& f, int h, int w, std::vector<double>& out) {
  out.resize(f.size());
  parallel_rows(h, [&](int i) {
    const int ib = i < h - 1 ? i : h - 2;  // last row copies the previous difference
    for (int j = 0; j < w; ++j) {
      out[at(i, j, w)] = f[at(ib + 1, j, w)] - f[at(ib, j, w)];
    }
  });
}

void diff_x_adjoint(const std::vector<double>& g, int h, int w, std::vector<double>& out) {
  out.resize(g.size());
  parallel_rows(h, [&](int i) {
    for (int j = 0; j < w; ++j) {
      double acc = 0.0;
      if (j >= 1) acc += g[at(i, j - 1, w)];
      if (j <= w - 2) acc -= g[at(i, j, w)];
      // the copied last column duplicates the w-2 difference
      if (j == w - 2) acc -= g[at(i, w - 1, w)];
      if (j == w - 1) acc += g[at(i, w - 1, w)];
      out[at(i, j, w)] = acc;
    }
  });
}

void diff_y_adjoint(const std::vector<double>& g, int h, int w, std::vector<double>& out) {
  out.resize(g.size());
  parallel_rows(h, [&](int i) {
    for (int j = 0; j < w; ++j) {
      double acc = 0.0;
      if (i >= 1) acc += g[at(i - 1, j, w)];
      if (i <= h - 2) acc -= g[at(i, j, w)];
      if (i == h - 2) acc -= g[at(h - 1, j, w)];
      if (i == h - 1) acc += g[at(h - 1, j, w)];
      out[at(i, j, w)] = acc;
    }
  });
}

namespace {

// 3-tap mean along x with reflect padding (-1 -> 1, w -> w-2).
void mean3_x(const std::vector<double>& f, int h, int w, std::vector<double>& out) {
  parallel_rows(h, [&](int i) {
    for (int j = 0; j < w; ++j) {
      const int jm = j > 0 ? j - 1 : 1;
      const int jp = j < w - 1 ? j + 1 : w - 2;
      out[at(i, j, w)] = kThird * (f[at(i, jm, w)] + f[at(i, j, w)] + f[at(i, jp, w)]);
    }
  });
}

void mean3_y(const std::vector<double>& f, int h, int w, std::vector<double>& out) {
  parallel_rows(h, [&](int i) {
    const int im = i > 0 ? i - 1 : 1;
    const int ip = i < h - 1 ? i + 1 : h - 2;
    for (int j = 0; j < w; ++j) {
      out[at(i, j, w)] = kThird * (f[at(im, j, w)] + f[at(i, j, w)] + f[at(ip, j, w)]);
    }
  });
}

// Adjoint of mean3_x: the in-range taps plus the two reflected border taps.
void mean3_x_adjoint(const std::vector<double>& g, int h, int w, std::vector<double>& out) {
  parallel_rows(h, [&](int i) {
    for (int j = 0; j < w; ++j) {
      double acc = g[at(i, j, w)];
      if (j >= 1) acc += g[at(i, j - 1, w)];
      if (j <= w - 2) acc += g[at(i, j + 1, w)];
      if (j == 1) acc += g[at(i, 0, w)];
      if (j == w - 2) acc += g[at(i, w - 1, w)];
      out[at(i, j, w)] = kThird * acc;
    }
  });
}

void mean3_y_adjoint(const std::vector<double>& g, int h, int w, std::vector<double>& out) {
  parallel_rows(h, [&](int i) {
    for (int j = 0; j < w; ++j) {
      double acc = g[at(i, j, w)];
      if (i >= 1) acc += g[at(i - 1, j, w)];
      if (i <= h - 2) acc += g[at(i + 1, j, w)];
      if (i == 1) acc += g[at(0, j, w)];
      if (i == h - 2) acc += g[at(h - 1, j, w)];
      out[at(i, j, w)] = kThird * acc;
    }
  });
}

}  // namespace

void box3_mean(const std::vector<double>& f, int h, int w, std::vector<double>& out) {
  std::vector<double> tmp(f.size());
  out.resize(f.size());
  mean3_x(f, h, w, tmp);
  mean3_y(tmp, h, w, out);
}

void box3_mean_adjoint(const std::vector<double>& g, int h, int w, std::vector<double>& out) {
  std::vector<double> tmp(g.size());
  out.resize(g.size());
  mean3_y_adjoint(g, h, w, tmp);
  mean3_x_adjoint(tmp, h, w, out);
}

}  // namespace gelflow
