#include "mfc/reference.hpp"

#include <cmath>
#include <string>

namespace mfc {

namespace {

constexpr double kPi = 3.14159265358979323846;

const double kLanczos[9] = {
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
};

bool is_nonpositive_integer(double x) {
    return x <= 0.0 && x == std::floor(x);
}

double lanczos_gamma(double x) {
    if (x < 0.5) {
        // reflection: Gamma(x) Gamma(1-x) = pi / sin(pi x)
        return kPi / (std::sin(kPi * x) * lanczos_gamma(1.0 - x));
    }
    x -= 1.0;
    double acc = kLanczos[0];
    for (int i = 1; i < 9; ++i) acc += kLanczos[i] / (x + i);
    const double t = x + 7.5;
    return std::sqrt(2.0 * kPi) * std::pow(t, x + 0.5) * std::exp(-t) * acc;
}

}  // namespace

double gamma_fn(double x) {
    if (is_nonpositive_integer(x))
        throw PoleError("Gamma pole at " + std::to_string(x));
    return lanczos_gamma(x);
}

double reciprocal_gamma(double x) {
    if (is_nonpositive_integer(x)) return 0.0;
    return 1.0 / lanczos_gamma(x);
}

double power_law_mult_value(const PowerLawCase& c, double terminal, double x) {
    if (!(c.alpha > 0.0)) throw NonPositiveOrder("power-law case needs alpha > 0");
    if (!(c.beta > 0.0)) throw PoleError("power-law case needs beta > 0");
    const double d = c.side == Side::Left ? x - terminal : terminal - x;
    if (d < 0.0)
        throw WrongSide("evaluation point " + std::to_string(x) +
                        " lies on the wrong side of the terminal " +
                        std::to_string(terminal));
    double ratio, expn;
    if (c.kind == PowerLawCase::Kind::Integral) {
        ratio = gamma_fn(c.beta) / gamma_fn(c.alpha + c.beta);
        expn = c.alpha + c.beta - 1.0;
    } else {
        if (is_nonpositive_integer(c.beta - c.alpha))
            throw PoleError("Gamma(beta - alpha) pole: beta - alpha = " +
                            std::to_string(c.beta - c.alpha));
        ratio = gamma_fn(c.beta) / gamma_fn(c.beta - c.alpha);
        expn = c.beta - c.alpha - 1.0;
    }
    return std::exp(ratio * std::pow(d, expn));
}

double constant_mult_rl_value(double c, double alpha, double distance) {
    if (!(c > 0.0)) throw NotPositive("constant must be positive");
    if (!(alpha > 0.0)) throw NonPositiveOrder("alpha must be positive");
    if (alpha == std::floor(alpha)) return 1.0;  // ordinary derivative of a constant
    if (!(distance > 0.0)) throw WrongSide("distance from the terminal must be positive");
    return std::exp(std::log(c) * std::pow(distance, -alpha) * reciprocal_gamma(1.0 - alpha));
}

GridFn taylor_tail_product(const GridFn& f, int n, Side side) {
    if (n < 1) throw GridTooCoarse("taylor_tail_product needs n >= 1");
    GridFn g = log_lift(f);
    const int npts = g.grid.n_points;
    const int edge = side == Side::Left ? 0 : npts - 1;
    const double terminal = g.grid.point(edge);

    // g^{(k)}(terminal), k = 0..n-1, via iterated one-sided differences
    std::vector<double> dk(n);
    dk[0] = g.values[edge];
    GridFn d = g;
    for (int k = 1; k < n; ++k) {
        d = finite_diff(d, 1);
        dk[k] = d.values[edge];
    }

    GridFn out;
    out.grid = f.grid;
    out.positive = true;
    out.values.resize(npts);
    const double sign = side == Side::Left ? 1.0 : -1.0;
    for (int i = 0; i < npts; ++i) {
        const double dist = sign * (g.grid.point(i) - terminal);  // >= 0
        double s = 0.0, pw = 1.0, fact = 1.0;
        for (int k = 0; k < n; ++k) {
            if (k > 0) {
                pw *= side == Side::Left ? dist : -dist;  // (+-d)^k with right sign
                fact *= k;
            }
            s += dk[k] * pw / fact;
        }
        out.values[i] = std::exp(s);
    }
    return out;
}

}  // namespace mfc
