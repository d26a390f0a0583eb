#pragma once

#include <functional>
#include <vector>

#include "mfc/errors.hpp"

namespace mfc {

// Finite interval [a, b], a < b.
struct Interval {
    double a = 0.0;
    double b = 1.0;
    double length() const { return b - a; }
};

enum class Side { Left, Right };

enum class Direction { Forward, Backward };

// Uniform grid of n_points nodes on [a, b], step h = (b-a)/(n_points-1).
struct UniformGrid {
    Interval interval;
    int n_points = 0;
    double h = 0.0;

    double point(int i) const { return interval.a + i * h; }
    std::vector<double> points() const;
};

// Function sampled on a uniform grid. `positive` records that every value
// was checked to be > 0 at sampling time; operators that work on positive
// functions trust this flag instead of re-validating.
//
// Sampled values are always finite. Operator *outputs* may carry non-finite
// markers at genuinely singular points (see rl_derivative); such GridFns are
// built internally and never re-validated.
struct GridFn {
    UniformGrid grid;
    std::vector<double> values;
    bool positive = false;

    int size() const { return static_cast<int>(values.size()); }
    double x(int i) const { return grid.point(i); }
};

// Fractional order alpha > 0 with n = floor(alpha) + 1 (so for an exact
// integer alpha, n = alpha + 1).
struct FracOrder {
    double alpha;
    int n;

    explicit FracOrder(double alpha);
};

UniformGrid make_grid(Interval interval, int n_points);

// Evaluate fn at every grid node. Throws NonFiniteValue on any nan/inf and,
// when require_positive is set, PositivityViolation on any value <= 0.
GridFn sample(const std::function<double(double)>& fn, const UniformGrid& grid,
              bool require_positive);

// g = ln(f), defined for positive f. Output positive flag is cleared.
GridFn log_lift(const GridFn& f);

// f = exp(g). Throws Overflow when exp leaves the finite double range.
GridFn exp_drop(const GridFn& g);

// Iterated first derivative: second-order central stencil at interior
// nodes, second-order one-sided stencils at the two boundary nodes,
// applied `order` times. Exact for polynomials of degree <= 2.
GridFn finite_diff(const GridFn& g, int order);

}  // namespace mfc
