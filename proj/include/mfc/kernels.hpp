#pragma once

#include <span>
#include <vector>

namespace mfc::kernels {

// Left-sided O(N^2) kernels shared by the classical operators. Each output
// point i accumulates its sum sequentially in index order, so results are
// bitwise identical no matter how the outer loop is scheduled; the parallel
// versions distribute output points across OpenMP threads and the serial
// versions in kernels::serial keep a plain loop for parity tests and
// benchmarking.

// Product-trapezoidal Riemann-Liouville integral of order alpha > 0 from the
// left terminal: the data are piecewise linear between nodes and the kernel
// moments int (x-t)^{alpha-1} {1, t} dt are integrated exactly per cell.
// out[0] = 0.
std::vector<double> rl_integral_left(std::span<const double> g, double h, double alpha);

// out[i] = scale * sum_{r=0}^{i} w[r] * g[i-r]; w must have at least g.size()
// entries. Covers the Grunwald-Letnikov derivative (w = signed binomial
// weights, scale = h^{-alpha}) and integral (w = rising coefficients,
// scale = h^p).
std::vector<double> convolve_left(std::span<const double> g, std::span<const double> w,
                                  double scale);

namespace serial {
std::vector<double> rl_integral_left(std::span<const double> g, double h, double alpha);
std::vector<double> convolve_left(std::span<const double> g, std::span<const double> w,
                                  double scale);
}  // namespace serial

}  // namespace mfc::kernels
