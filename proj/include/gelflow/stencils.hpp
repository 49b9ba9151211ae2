#pragma once

#include <vector>

namespace gelflow {

// Scalar field stencils shared by the loss terms and their gradients. Every
// operator here is linear with a hand-written adjoint, and both directions
// are pure gathers: each output element is written once, so OpenMP results
// do not depend on partitioning.
//
// Grid fields are row-major h*w vectors of doubles.

// Forward difference along x, last column copied from its left neighbor:
// (dx f)(i,j) = f(i,j+1) - f(i,j) for j < w-1, (dx f)(i,w-1) = (dx f)(i,w-2).
void diff_x(const std::vector<double>& f, int h, int w, std::vector<double>& out);
void diff_y(const std::vector<double>& f, int h, int w, std::vector<double>& out);

// Adjoints of diff_x / diff_y including the copied border row/column.
void diff_x_adjoint(const std::vector<double>& g, int h, int w, std::vector<double>& out);
void diff_y_adjoint(const std::vector<double>& g, int h, int w, std::vector<double>& out);

// Mean over the reflect-padded 3x3 window (the SSIM window) and its adjoint.
void box3_mean(const std::vector<double>& f, int h, int w, std::vector<double>& out);
void box3_mean_adjoint(const std::vector<double>& g, int h, int w, std::vector<double>& out);

}  // namespace gelflow
