#include "mfc/classical.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "mfc/kernels.hpp"
#include "mfc/reference.hpp"

namespace mfc {

namespace {

GridFn like(const GridFn& g, std::vector<double> values) {
    GridFn out;
    out.grid = g.grid;
    out.positive = false;
    out.values = std::move(values);
    return out;
}

GridFn mirrored(const GridFn& g) {
    GridFn r = g;
    std::reverse(r.values.begin(), r.values.end());
    return r;
}

// Right-side operators are the left-side ones conjugated by reflection
// t -> a + b - t; reversing the sample order realizes the reflection
// exactly on a uniform grid (differences pick up the required signs
// automatically).
template <class LeftOp>
GridFn with_side(const GridFn& g, Side side, LeftOp&& left_op) {
    if (side == Side::Left) return left_op(g);
    GridFn r = left_op(mirrored(g));
    std::reverse(r.values.begin(), r.values.end());
    return r;
}

std::vector<double> cumtrapz(const std::vector<double>& v, double h) {
    std::vector<double> out(v.size(), 0.0);
    for (std::size_t i = 1; i < v.size(); ++i)
        out[i] = out[i - 1] + 0.5 * h * (v[i - 1] + v[i]);
    return out;
}

// g^{(k)}(left edge) for k = 0..kmax by iterated differencing.
std::vector<double> edge_derivatives(const GridFn& g, int kmax) {
    std::vector<double> dk(kmax + 1);
    dk[0] = g.values[0];
    GridFn d = g;
    for (int k = 1; k <= kmax; ++k) {
        d = finite_diff(d, 1);
        dk[k] = d.values[0];
    }
    return dk;
}

GridFn caputo_left(const GridFn& g, double alpha) {
    const int m = caputo_order(alpha);
    GridFn dm = finite_diff(g, m);
    if (alpha == static_cast<double>(m)) return dm;
    return like(g, kernels::rl_integral_left(dm.values, g.grid.h, m - alpha));
}

GridFn rl_derivative_left(const GridFn& g, double alpha) {
    // D^alpha g = Caputo D^alpha g + sum_{k<m} g^{(k)}(a) d^{k-alpha}/Gamma(k+1-alpha),
    // with m matching the order of the Caputo form; at integer alpha every
    // reciprocal-Gamma factor vanishes and the tail drops out.
    const int n = caputo_order(alpha);
    GridFn out = caputo_left(g, alpha);
    const std::vector<double> dk = edge_derivatives(g, n - 1);

    double gmax = 0.0;
    for (double v : g.values) gmax = std::max(gmax, std::abs(v));
    const double coef_tol = 1e-8 * (1.0 + gmax);

    const int npts = g.grid.n_points;
    const double h = g.grid.h;
    for (int k = 0; k < n; ++k) {
        const double rg = reciprocal_gamma(k + 1 - alpha);
        if (rg == 0.0 || dk[k] == 0.0) continue;
        for (int i = 1; i < npts; ++i)
            out.values[i] += dk[k] * std::pow(i * h, k - alpha) * rg;
    }

    // terminal node: the tail has d^{k-alpha} factors that blow up for k < alpha;
    // the sign of the dominant (smallest-k) term decides the marker
    for (int k = 0; k < n && k < alpha; ++k) {
        const double rg = reciprocal_gamma(k + 1 - alpha);
        if (rg != 0.0 && std::abs(dk[k]) > coef_tol) {
            out.values[0] = dk[k] * rg > 0.0 ? std::numeric_limits<double>::infinity()
                                             : -std::numeric_limits<double>::infinity();
            break;
        }
    }
    return out;
}

GridFn conformable_integral_left(const GridFn& g, double alpha) {
    const int npts = g.grid.n_points;
    const double h = g.grid.h;
    const std::vector<double>& w = g.values;
    std::vector<double> cell(npts - 1);

    // exact moments of (u)^{alpha-1} {1, u} against a linear density per cell,
    // u measured from the terminal
    for (int j = 0; j + 1 < npts; ++j) {
        const double u0 = j * h, u1 = (j + 1) * h;
        const double m0 = (std::pow(u1, alpha) - std::pow(u0, alpha)) / alpha;
        const double m1 =
            (std::pow(u1, alpha + 1.0) - std::pow(u0, alpha + 1.0)) / (alpha + 1.0);
        const double s = (w[j + 1] - w[j]) / h;
        cell[j] = (w[j] - s * u0) * m0 + s * m1;
    }

    if (alpha < 1.0) {
        // terminal cell: fit w = c1 + c2 u + c0 u^{1-alpha} through the first
        // three nodes; the second difference isolates the singular mode, so
        // smooth data keep c0 ~ 0 while conformable-derivative outputs are
        // reproduced exactly
        const double d1 = w[1] - w[0], d2 = w[2] - w[0];
        const double hp = std::pow(h, 1.0 - alpha);
        const double c0 = (d2 - 2.0 * d1) / ((std::pow(2.0, 1.0 - alpha) - 2.0) * hp);
        const double c2 = (d1 - c0 * hp) / h;
        cell[0] = w[0] * std::pow(h, alpha) / alpha +
                  c2 * std::pow(h, alpha + 1.0) / (alpha + 1.0) + c0 * h;
    }

    std::vector<double> out(npts, 0.0);
    for (int j = 0; j + 1 < npts; ++j) out[j + 1] = out[j] + cell[j];
    return like(g, std::move(out));
}

}  // namespace

int caputo_order(double alpha) {
    const int m = static_cast<int>(std::ceil(alpha));
    return m < 1 ? 1 : m;
}

GLWeights gl_weights(double alpha, int N) {
    if (N < 0) throw Error("gl_weights needs N >= 0");
    GLWeights out;
    out.alpha = alpha;
    out.w.resize(N + 1);
    out.w[0] = 1.0;
    for (int r = 1; r <= N; ++r) out.w[r] = out.w[r - 1] * (1.0 - (alpha + 1.0) / r);
    return out;
}

std::vector<double> rising_coefficients(double p, int N) {
    if (N < 0) throw Error("rising_coefficients needs N >= 0");
    std::vector<double> c(N + 1);
    c[0] = 1.0;
    for (int r = 1; r <= N; ++r) c[r] = c[r - 1] * (p + r - 1.0) / r;
    return c;
}

GridFn rl_integral(const GridFn& g, FracOrder order, Side side) {
    return with_side(g, side, [&](const GridFn& v) {
        return like(v, kernels::rl_integral_left(v.values, v.grid.h, order.alpha));
    });
}

GridFn cauchy_iterated_integral(const GridFn& g, int n, Side side) {
    if (n < 1) throw Error("cauchy_iterated_integral needs n >= 1");
    return with_side(g, side, [&](const GridFn& v) {
        std::vector<double> acc = v.values;
        for (int k = 0; k < n; ++k) acc = cumtrapz(acc, v.grid.h);
        return like(v, std::move(acc));
    });
}

GridFn rl_derivative(const GridFn& g, FracOrder order, Side side) {
    return with_side(g, side,
                     [&](const GridFn& v) { return rl_derivative_left(v, order.alpha); });
}

GridFn caputo_derivative(const GridFn& g, FracOrder order, Side side) {
    return with_side(g, side,
                     [&](const GridFn& v) { return caputo_left(v, order.alpha); });
}

GridFn gl_derivative(const GridFn& g, FracOrder order, Side side) {
    const GLWeights w = gl_weights(order.alpha, g.grid.n_points - 1);
    const double scale = std::pow(g.grid.h, -order.alpha);
    return with_side(g, side, [&](const GridFn& v) {
        return like(v, kernels::convolve_left(v.values, w.w, scale));
    });
}

GridFn gl_integral(const GridFn& g, double p, Side side) {
    if (!(p > 0.0)) throw NonPositiveOrder("gl_integral needs p > 0");
    const std::vector<double> c = rising_coefficients(p, g.grid.n_points - 1);
    const double scale = std::pow(g.grid.h, p);
    return with_side(g, side, [&](const GridFn& v) {
        return like(v, kernels::convolve_left(v.values, c, scale));
    });
}

GridFn conformable_derivative(const GridFn& g, double alpha, Side side) {
    if (!(alpha > 0.0) || alpha > 1.0)
        throw OrderOutOfRange("conformable derivative needs alpha in (0, 1], got " +
                              std::to_string(alpha));
    return with_side(g, side, [&](const GridFn& v) {
        GridFn d = finite_diff(v, 1);
        const double h = v.grid.h;
        for (int i = 0; i < v.grid.n_points; ++i)
            d.values[i] *= std::pow(i * h, 1.0 - alpha);
        return d;
    });
}

GridFn conformable_integral(const GridFn& g, double alpha, Side side) {
    if (!(alpha > 0.0) || alpha > 1.0)
        throw OrderOutOfRange("conformable integral needs alpha in (0, 1], got " +
                              std::to_string(alpha));
    return with_side(g, side,
                     [&](const GridFn& v) { return conformable_integral_left(v, alpha); });
}

}  // namespace mfc
