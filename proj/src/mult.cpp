#include "mfc/mult.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace mfc {

namespace {

// exp without the overflow check of exp_drop: singular markers (+-inf) in
// classical-derivative outputs pass through as inf / 0.
GridFn exp_lenient(const GridFn& g) {
    GridFn f;
    f.grid = g.grid;
    f.positive = true;
    f.values.resize(g.values.size());
    for (std::size_t i = 0; i < g.values.size(); ++i) f.values[i] = std::exp(g.values[i]);
    return f;
}

std::vector<double> cumtrapz(const std::vector<double>& v, double h) {
    std::vector<double> out(v.size(), 0.0);
    for (std::size_t i = 1; i < v.size(); ++i)
        out[i] = out[i - 1] + 0.5 * h * (v[i - 1] + v[i]);
    return out;
}

// S_g: Taylor polynomial of g at the terminal, degree n-1, with the
// one-sided edge derivatives; right side uses (-1)^k g^{(k)}(b) (b-t)^k.
std::vector<double> taylor_poly_log(const GridFn& g, int n, Side side) {
    const int npts = g.grid.n_points;
    const int edge = side == Side::Left ? 0 : npts - 1;
    std::vector<double> dk(n);
    dk[0] = g.values[edge];
    GridFn d = g;
    for (int k = 1; k < n; ++k) {
        d = finite_diff(d, 1);
        dk[k] = d.values[edge];
    }
    std::vector<double> s(npts, 0.0);
    for (int i = 0; i < npts; ++i) {
        const double dist = side == Side::Left ? i * g.grid.h : (npts - 1 - i) * g.grid.h;
        const double signed_d = side == Side::Left ? dist : -dist;
        double pw = 1.0, fact = 1.0, acc = 0.0;
        for (int k = 0; k < n; ++k) {
            if (k > 0) {
                pw *= signed_d;
                fact *= k;
            }
            acc += dk[k] * pw / fact;
        }
        s[i] = acc;
    }
    return s;
}

}  // namespace

GridFn mult_derivative(const GridFn& f, int n, Direction) {
    if (n < 1) throw Error("mult_derivative needs n >= 1");
    return exp_lenient(finite_diff(log_lift(f), n));
}

GridFn mult_derivative_limit_quotient(const GridFn& f, Direction direction, double h) {
    const double gh = f.grid.h;
    if (std::abs(h - gh) > 1e-12 * gh)
        throw Error("limit quotient step " + std::to_string(h) +
                    " must equal the grid step " + std::to_string(gh));
    const GridFn g = log_lift(f);
    const int n = g.grid.n_points;
    GridFn out;
    out.grid = f.grid;
    out.positive = true;
    out.values.resize(n);
    auto fwd = [&](int i) { return (g.values[i + 1] - g.values[i]) / gh; };
    auto bwd = [&](int i) { return (g.values[i] - g.values[i - 1]) / gh; };
    for (int i = 0; i < n; ++i) {
        double q;
        if (direction == Direction::Forward)
            q = i + 1 < n ? fwd(i) : bwd(i);
        else
            q = i > 0 ? bwd(i) : fwd(i);
        out.values[i] = std::exp(q);
    }
    return out;
}

GridFn mult_integral(const GridFn& f) {
    const GridFn g = log_lift(f);
    GridFn out;
    out.grid = f.grid;
    out.positive = true;
    std::vector<double> acc = cumtrapz(g.values, g.grid.h);
    out.values.resize(acc.size());
    for (std::size_t i = 0; i < acc.size(); ++i) out.values[i] = std::exp(acc[i]);
    return out;
}

GridFn mult_rl_integral(const GridFn& f, FracOrder order, Side side) {
    return exp_lenient(rl_integral(log_lift(f), order, side));
}

GridFn mult_rl_derivative(const GridFn& f, FracOrder order, Side side) {
    return exp_lenient(rl_derivative(log_lift(f), order, side));
}

GridFn mult_caputo(const GridFn& f, FracOrder order, Side side) {
    return exp_lenient(caputo_derivative(log_lift(f), order, side));
}

GridFn mult_caputo_via_rl(const GridFn& f, FracOrder order, Side side) {
    GridFn q = log_lift(f);
    const std::vector<double> s = taylor_poly_log(q, caputo_order(order.alpha), side);
    for (int i = 0; i < q.grid.n_points; ++i) q.values[i] -= s[i];
    return exp_lenient(rl_derivative(q, order, side));
}

GridFn mult_letnikov_derivative(const GridFn& f, FracOrder order, Side side) {
    return exp_lenient(gl_derivative(log_lift(f), order, side));
}

GridFn mult_letnikov_integral(const GridFn& f, double p, Side side) {
    return exp_lenient(gl_integral(log_lift(f), p, side));
}

GridFn mult_conformable_derivative(const GridFn& f, double alpha, Side side) {
    if (!(alpha > 0.0)) throw OrderOutOfRange("conformable order must be positive");
    GridFn g = log_lift(f);
    const int n = caputo_order(alpha) - 1;  // alpha in (n, n+1]
    const double beta = alpha - n;
    if (n > 0) {
        g = finite_diff(g, n);
        // the right-side operator chain carries (-d/dt)^n, as in the RL case;
        // without it the inversion theorems fail for odd n
        if (side == Side::Right && n % 2 == 1)
            for (double& v : g.values) v = -v;
    }
    return exp_lenient(conformable_derivative(g, beta, side));
}

GridFn mult_conformable_integral(const GridFn& f, double alpha, Side side) {
    if (!(alpha > 0.0)) throw OrderOutOfRange("conformable order must be positive");
    GridFn g = log_lift(f);
    const int n = caputo_order(alpha) - 1;
    const double beta = alpha - n;
    GridFn acc = conformable_integral(g, beta, side);
    for (int k = 0; k < n; ++k) acc = cauchy_iterated_integral(acc, 1, side);
    return exp_lenient(acc);
}

GridFn apply_operator(const GridFn& f, const OperatorRequest& req) {
    switch (req.kind) {
        case OperatorKind::MultDeriv: {
            const int n = static_cast<int>(req.order);
            if (n < 1 || req.order != static_cast<double>(n))
                throw OrderOutOfRange("multiplicative derivative needs a positive integer order");
            return mult_derivative(f, n, req.direction);
        }
        case OperatorKind::MultIntegral: return mult_integral(f);
        case OperatorKind::MultRLIntegral:
            return mult_rl_integral(f, FracOrder(req.order), req.side);
        case OperatorKind::MultRLDeriv:
            return mult_rl_derivative(f, FracOrder(req.order), req.side);
        case OperatorKind::MultCaputo:
            return mult_caputo(f, FracOrder(req.order), req.side);
        case OperatorKind::MultLetnikovDeriv:
            return mult_letnikov_derivative(f, FracOrder(req.order), req.side);
        case OperatorKind::MultLetnikovIntegral:
            return mult_letnikov_integral(f, req.order, req.side);
        case OperatorKind::MultConfDeriv:
            return mult_conformable_derivative(f, req.order, req.side);
        case OperatorKind::MultConfIntegral:
            return mult_conformable_integral(f, req.order, req.side);
    }
    throw Error("unhandled operator kind");
}

}  // namespace mfc
