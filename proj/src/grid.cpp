#include "mfc/grid.hpp"

#include <cmath>
#include <string>

namespace mfc {

std::vector<double> UniformGrid::points() const {
    std::vector<double> xs(n_points);
    for (int i = 0; i < n_points; ++i) xs[i] = point(i);
    return xs;
}

FracOrder::FracOrder(double a) : alpha(a) {
    if (!(a > 0.0) || !std::isfinite(a))
        throw NonPositiveOrder("fractional order must be a finite positive real, got " +
                               std::to_string(a));
    n = static_cast<int>(std::floor(a)) + 1;
}

UniformGrid make_grid(Interval interval, int n_points) {
    if (!std::isfinite(interval.a) || !std::isfinite(interval.b) ||
        interval.a >= interval.b)
        throw DegenerateInterval("interval endpoints must be finite with a < b, got [" +
                                 std::to_string(interval.a) + ", " +
                                 std::to_string(interval.b) + "]");
    if (n_points < 3)
        throw TooFewPoints("grid needs at least 3 points, got " + std::to_string(n_points));
    UniformGrid g;
    g.interval = interval;
    g.n_points = n_points;
    g.h = (interval.b - interval.a) / (n_points - 1);
    return g;
}

GridFn sample(const std::function<double(double)>& fn, const UniformGrid& grid,
              bool require_positive) {
    GridFn out;
    out.grid = grid;
    out.values.resize(grid.n_points);
    out.positive = require_positive;
    for (int i = 0; i < grid.n_points; ++i) {
        const double v = fn(grid.point(i));
        if (!std::isfinite(v))
            throw NonFiniteValue("function value not finite at t = " +
                                 std::to_string(grid.point(i)));
        if (require_positive && v <= 0.0)
            throw PositivityViolation("function value " + std::to_string(v) +
                                      " at t = " + std::to_string(grid.point(i)) +
                                      " is not positive");
        out.values[i] = v;
    }
    return out;
}

GridFn log_lift(const GridFn& f) {
    if (!f.positive)
        throw NotPositive("log_lift requires a function sampled with the positivity check");
    GridFn g;
    g.grid = f.grid;
    g.positive = false;
    g.values.resize(f.values.size());
    for (std::size_t i = 0; i < f.values.size(); ++i) g.values[i] = std::log(f.values[i]);
    return g;
}

GridFn exp_drop(const GridFn& g) {
    GridFn f;
    f.grid = g.grid;
    f.positive = true;
    f.values.resize(g.values.size());
    for (std::size_t i = 0; i < g.values.size(); ++i) {
        const double v = std::exp(g.values[i]);
        if (!std::isfinite(v))
            throw Overflow("exp overflow: exponent " + std::to_string(g.values[i]));
        f.values[i] = v;
    }
    return f;
}

namespace {

// One pass of the second-order first-derivative stencil set. The boundary
// stencils are arranged as differences so constant data yield exactly zero.
std::vector<double> diff_once(const std::vector<double>& v, double h) {
    const int n = static_cast<int>(v.size());
    std::vector<double> d(n);
    const double inv2h = 1.0 / (2.0 * h);
    d[0] = (4.0 * (v[1] - v[0]) - (v[2] - v[0])) * inv2h;
    for (int i = 1; i + 1 < n; ++i) d[i] = (v[i + 1] - v[i - 1]) * inv2h;
    d[n - 1] = (4.0 * (v[n - 1] - v[n - 2]) - (v[n - 1] - v[n - 3])) * inv2h;
    return d;
}

}  // namespace

GridFn finite_diff(const GridFn& g, int order) {
    if (order < 1) throw GridTooCoarse("finite_diff order must be >= 1");
    if (order >= g.grid.n_points - 1)
        throw GridTooCoarse("finite_diff order " + std::to_string(order) +
                            " too high for " + std::to_string(g.grid.n_points) +
                            " grid points");
    GridFn out;
    out.grid = g.grid;
    out.positive = false;
    out.values = g.values;
    for (int k = 0; k < order; ++k) out.values = diff_once(out.values, g.grid.h);
    return out;
}

}  // namespace mfc
