#pragma once

#include "mfc/grid.hpp"

namespace mfc {

// Grunwald-Letnikov weights w_r = (-1)^r C(alpha, r), generated by
// w_0 = 1, w_r = w_{r-1} (1 - (alpha+1)/r). For integer alpha = n the row
// terminates: w_r = 0 for r > n.
struct GLWeights {
    double alpha;
    std::vector<double> w;  // w[r], r = 0..N
};

GLWeights gl_weights(double alpha, int N);

// Rising coefficients [p r] = p(p+1)...(p+r-1)/r!, generated by
// [p 0] = 1, [p r] = [p r-1] (p+r-1)/r. Satisfies (-1)^r [p r] = C(-p, r).
std::vector<double> rising_coefficients(double p, int N);

// Riemann-Liouville fractional integral (I^alpha g)(x) at every node, from
// terminal a (Left) or b (Right), by the product-trapezoidal rule. The value
// at the terminal itself is 0.
GridFn rl_integral(const GridFn& g, FracOrder order, Side side);

// n-fold repeated trapezoidal integration from the terminal.
GridFn cauchy_iterated_integral(const GridFn& g, int n, Side side);

// Riemann-Liouville fractional derivative, computed for n-times
// differentiable data as Caputo derivative plus the Taylor tail
//
//   sum_{k=0}^{n-1} g^{(k)}(terminal) d^{k-alpha} / Gamma(k+1-alpha)
//
// with d the distance from the terminal; the right side carries
// (-1)^k g^{(k)}(b). At the terminal node the tail genuinely diverges
// whenever some contributing g^{(k)}(terminal) != 0 with k < alpha; the
// output carries a signed infinity marker there.
GridFn rl_derivative(const GridFn& g, FracOrder order, Side side);

// Caputo fractional derivative (I^{m-alpha} g^{(m)}) with m = ceil(alpha),
// so that integer orders reduce to the ordinary m-th derivative. The right
// side applies (-1)^m to g^{(m)}.
GridFn caputo_derivative(const GridFn& g, FracOrder order, Side side);

// Grunwald-Letnikov derivative: h^{-alpha} sum_r w_r g(t -+ r h), the sum
// running to the terminal.
GridFn gl_derivative(const GridFn& g, FracOrder order, Side side);

// Grunwald-Letnikov integral: h^p sum_r [p r] g(t -+ r h).
GridFn gl_integral(const GridFn& g, double p, Side side);

// Conformable derivative, alpha in (0, 1]:
// (t-a)^{1-alpha} g'(t) (left), -(b-t)^{1-alpha} g'(t) (right).
GridFn conformable_derivative(const GridFn& g, double alpha, Side side);

// Cumulative integral of the weakly singular density
// int (x-a)^{alpha-1} g(x) dx (left, mirrored on the right), alpha in (0,1],
// with the kernel moments integrated exactly per cell. The cell adjacent to
// the terminal uses the density model {1, x, x^{1-alpha}}: outputs of
// conformable_derivative vanish at the terminal like (x-a)^{1-alpha}, a mode
// a linear model cannot represent there.
GridFn conformable_integral(const GridFn& g, double alpha, Side side);

// Order used by the Caputo forms: ceil(alpha), so exact integers keep their
// classical meaning (D^m = d^m/dt^m).
int caputo_order(double alpha);

}  // namespace mfc
