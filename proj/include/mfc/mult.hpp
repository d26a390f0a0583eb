#pragma once

#include "mfc/classical.hpp"
#include "mfc/grid.hpp"

namespace mfc {

// Multiplicative (geometric) operators on positive grid functions. Every
// operator is evaluated end-to-end in log space and exponentiated once at
// output: the lift g = ln f carries each multiplicative operator to its
// classical counterpart, and working multiplicatively per factor would
// overflow even at modest grid sizes.
//
// Outputs are positive grid functions; genuinely singular points (the
// terminal of RL-type derivatives) carry +inf, and exp(-inf) underflows to 0
// for functions below 1 there.

// exp(d^n/dt^n ln f). Forward and backward multiplicative derivatives
// coincide on the real line; `direction` only selects the one-sided quotient
// in mult_derivative_limit_quotient.
GridFn mult_derivative(const GridFn& f, int n, Direction direction = Direction::Forward);

// The defining quotient at step h: (f(x+h)/f(x))^{1/h} (Forward) or
// (f(x)/f(x-h))^{1/h} (Backward), evaluated in log space. h must equal the
// grid step so the shifted argument lands on a node. At the single boundary
// node where the stencil leaves the grid, the opposite quotient is used.
GridFn mult_derivative_limit_quotient(const GridFn& f, Direction direction, double h);

// Cumulative multiplicative integral exp(int_a^x ln f dt); the value over
// the whole interval is the last entry.
GridFn mult_integral(const GridFn& f);

GridFn mult_rl_integral(const GridFn& f, FracOrder order, Side side);
GridFn mult_rl_derivative(const GridFn& f, FracOrder order, Side side);
GridFn mult_caputo(const GridFn& f, FracOrder order, Side side);

// Caputo through the RL form: the multiplicative RL derivative applied to
// f(t) exp(-S_g(t)), S_g the Taylor polynomial of g = ln f at the terminal
// (degree ceil(alpha) - 1). Agrees with mult_caputo for smooth f.
GridFn mult_caputo_via_rl(const GridFn& f, FracOrder order, Side side);

// Letnikov product forms, evaluated as exp of the additive GL sums.
GridFn mult_letnikov_derivative(const GridFn& f, FracOrder order, Side side);
GridFn mult_letnikov_integral(const GridFn& f, double p, Side side);

// Conformable derivative for any alpha > 0: for alpha in (n, n+1] the
// order-beta derivative (beta = alpha - n) is applied to the n-th
// multiplicative derivative; the right side differentiates with (-d/dt)^n,
// matching the RL operator chain.
GridFn mult_conformable_derivative(const GridFn& f, double alpha, Side side);

// Conformable integral for any alpha > 0: for alpha in (n, n+1] the inner
// kernel-weighted integral of order beta = alpha - n is followed by n plain
// cumulative integrations from the terminal.
GridFn mult_conformable_integral(const GridFn& f, double alpha, Side side);

enum class OperatorKind {
    MultDeriv,
    MultIntegral,
    MultRLIntegral,
    MultRLDeriv,
    MultCaputo,
    MultLetnikovDeriv,
    MultLetnikovIntegral,
    MultConfDeriv,
    MultConfIntegral,
};

// A fully specified operator application; `order` is alpha, or the integer n
// for MultDeriv, and `direction` matters only for MultDeriv.
struct OperatorRequest {
    OperatorKind kind = OperatorKind::MultDeriv;
    double order = 1.0;
    Side side = Side::Left;
    Direction direction = Direction::Forward;
};

// Dispatches to the operator above after validating the kind-appropriate
// order range (MultDeriv needs a positive integer; the conformable operators
// accept any alpha > 0 through the higher-order definitions).
GridFn apply_operator(const GridFn& f, const OperatorRequest& req);

}  // namespace mfc
