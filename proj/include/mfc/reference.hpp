#pragma once

#include "mfc/grid.hpp"

namespace mfc {

// Gamma function via the Lanczos approximation (g = 7, 9-term coefficient
// set) with the reflection formula for x < 0.5. Relative error is at the
// 1e-13 level over the argument range used by the fractional operators.
// Throws PoleError at nonpositive integers.
double gamma_fn(double x);

// 1/Gamma(x), returning exactly 0 at the poles (nonpositive integers).
double reciprocal_gamma(double x);

// Closed forms for f(t) = exp((t-a)^{beta-1}) (left) or exp((b-t)^{beta-1})
// (right) under the multiplicative Riemann-Liouville operators:
//
//   integral:    exp( Gamma(beta)/Gamma(alpha+beta) * d^{alpha+beta-1} )
//   derivative:  exp( Gamma(beta)/Gamma(beta -alpha) * d^{beta-alpha-1} )
//
// with d the distance from the terminal.
struct PowerLawCase {
    enum class Kind { Integral, Derivative };
    double alpha;
    double beta;
    Side side = Side::Left;
    Kind kind = Kind::Integral;
};

// d = x - terminal (left) or terminal - x (right); throws WrongSide when x is
// on the wrong side of the terminal and PoleError when the derivative case
// hits a Gamma pole (beta - alpha a nonpositive integer).
double power_law_mult_value(const PowerLawCase& c, double terminal, double x);

// Multiplicative RL derivative of the constant function c > 0 at distance
// d > 0 from the terminal: exp(ln c * d^{-alpha} / Gamma(1-alpha)).
// Integer alpha reduces to the ordinary multiplicative derivative, which is 1.
double constant_mult_rl_value(double c, double alpha, double distance);

// prod_{k=0}^{n-1} exp(g^{(k)}(terminal) * (+-d)^k / k!) with g = ln f and
// the derivatives at the terminal taken from one-sided finite differences.
// The right side carries (-1)^k g^{(k)}(b) (b-t)^k.
GridFn taylor_tail_product(const GridFn& f, int n, Side side);

}  // namespace mfc
