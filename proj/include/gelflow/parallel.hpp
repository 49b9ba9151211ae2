#pragma once

#include <cstddef>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace gelflow {

// Row-parallel helpers. Maps write each output element exactly once, so any
// OpenMP schedule yields the same bits. Reductions accumulate one partial per
// row and combine the partials serially in row order, which keeps the result
// independent of thread count and scheduling.

template <typename Fn>
inline void parallel_rows(int rows, Fn&& fn) {
#pragma omp parallel for schedule(static)
  for (int i = 0; i < rows; ++i) {
    fn(i);
  }
}

// fn(row) returns that row's partial sum.
template <typename Fn>
inline double parallel_row_sum(int rows, Fn&& fn) {
  std::vector<double> partial(static_cast<std::size_t>(rows), 0.0);
#pragma omp parallel for schedule(static)
  for (int i = 0; i < rows; ++i) {
    partial[static_cast<std::size_t>(i)] = fn(i);
  }
  double total = 0.0;
  for (double p : partial) {
    total += p;
  }
  return total;
}

}  // namespace gelflow
