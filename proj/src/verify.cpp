#include "mfc/verify.hpp"

#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <functional>
#include <limits>
#include <random>

#include "mfc/classical.hpp"
#include "mfc/mult.hpp"
#include "mfc/reference.hpp"

namespace mfc {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

struct Config {
    int n_points;  // resolved per property before the callback runs
    std::uint64_t seed;
};

struct Outcome {
    double error;
    std::string summary;
};

std::string fmt(const char* f, ...) {
    char buf[256];
    va_list ap;
    va_start(ap, f);
    std::vsnprintf(buf, sizeof buf, f, ap);
    va_end(ap);
    return buf;
}

// Uniform in [-1, 1] from raw mt19937_64 draws, independent of any
// distribution implementation.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}
    double sym() { return 2.0 * ((gen_() >> 11) * 0x1.0p-53) - 1.0; }

  private:
    std::mt19937_64 gen_;
};

// exp(c0 + c1 t + c2 t^2 + c3 t^3): positive, smooth, seed-reproducible.
std::function<double(double)> random_positive(Rng& rng) {
    const double c0 = rng.sym(), c1 = rng.sym(), c2 = rng.sym(), c3 = rng.sym();
    return [=](double t) { return std::exp(c0 + t * (c1 + t * (c2 + t * c3))); };
}

double rel_err(double value, double target) {
    return std::abs(value - target) / std::abs(target);
}

// max relative error over nodes with x within [lo_frac, hi_frac] of the span
double max_rel(const GridFn& value, const std::vector<double>& target,
               double lo_frac = 0.0, double hi_frac = 1.0) {
    double worst = 0.0;
    const int n = value.grid.n_points;
    for (int i = 0; i < n; ++i) {
        const double frac = static_cast<double>(i) / (n - 1);
        if (frac < lo_frac || frac > hi_frac) continue;
        worst = std::max(worst, rel_err(value.values[i], target[i]));
    }
    return worst;
}

GridFn sample_on(const std::function<double(double)>& fn, int n_points) {
    return sample(fn, make_grid({0.0, 1.0}, n_points), true);
}

double loglog_slope(const std::vector<double>& hs, const std::vector<double>& errs) {
    const int n = static_cast<int>(hs.size());
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (int i = 0; i < n; ++i) {
        const double x = std::log(hs[i]), y = std::log(errs[i]);
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

const std::function<double(double)> kSmooth = [](double t) { return std::exp(std::sin(t) + 2.0); };

// ---------------- individual properties ----------------

Outcome p_lift_identity(const Config& cfg) {
    Rng rng(cfg.seed);
    const auto fn = random_positive(rng);
    const GridFn f = sample_on(fn, cfg.n_points);
    const GridFn g = log_lift(f);
    const FracOrder a(0.6);

    // lifted paths: ln(M f) vs (A ln f), identical by construction
    double exact = 0.0;
    {
        const GridFn mi = mult_rl_integral(f, a, Side::Left);
        const GridFn ai = rl_integral(g, a, Side::Left);
        for (int i = 0; i < f.grid.n_points; ++i)
            exact = std::max(exact, std::abs(std::log(mi.values[i]) - ai.values[i]));
        const GridFn mc = mult_caputo(f, a, Side::Right);
        const GridFn ac = caputo_derivative(g, a, Side::Right);
        for (int i = 0; i < f.grid.n_points; ++i)
            exact = std::max(exact, std::abs(std::log(mc.values[i]) - ac.values[i]));
    }

    // direct path: one-sided quotients against exp(g') at the grid step
    const GridFn d = mult_derivative(f, 1);
    double direct = 0.0;
    for (Direction dir : {Direction::Forward, Direction::Backward}) {
        const GridFn q = mult_derivative_limit_quotient(f, dir, f.grid.h);
        for (int i = 1; i + 1 < f.grid.n_points; ++i)
            direct = std::max(direct,
                              std::abs(std::log(q.values[i]) - std::log(d.values[i])));
    }
    return {std::max(exact, direct),
            fmt("N=%d lifted-path max %.2e, quotient-vs-derivative max %.2e",
                cfg.n_points, exact, direct)};
}

Outcome p_product_rule(const Config& cfg) {
    Rng rng(cfg.seed);
    double worst = 0.0;
    const FracOrder a(0.7);
    for (int rep = 0; rep < 5; ++rep) {
        const auto f1 = random_positive(rng);
        const auto f2 = random_positive(rng);
        const GridFn f = sample_on(f1, cfg.n_points);
        const GridFn g = sample_on(f2, cfg.n_points);
        GridFn fg = f;
        for (int i = 0; i < f.grid.n_points; ++i) fg.values[i] *= g.values[i];

        const auto check = [&](const GridFn& both, const GridFn& l, const GridFn& r) {
            for (int i = 1; i < f.grid.n_points; ++i) {
                const double prod = l.values[i] * r.values[i];
                if (!std::isfinite(prod) || !std::isfinite(both.values[i])) continue;
                worst = std::max(worst, rel_err(both.values[i], prod));
            }
        };
        check(mult_rl_derivative(fg, a, Side::Left), mult_rl_derivative(f, a, Side::Left),
              mult_rl_derivative(g, a, Side::Left));
        check(mult_caputo(fg, a, Side::Left), mult_caputo(f, a, Side::Left),
              mult_caputo(g, a, Side::Left));
        check(mult_letnikov_derivative(fg, a, Side::Left),
              mult_letnikov_derivative(f, a, Side::Left),
              mult_letnikov_derivative(g, a, Side::Left));
        check(mult_conformable_derivative(fg, 0.5, Side::Left),
              mult_conformable_derivative(f, 0.5, Side::Left),
              mult_conformable_derivative(g, 0.5, Side::Left));
    }
    return {worst, fmt("N=%d, 5 seeded pairs, RL/Caputo/Letnikov/conformable", cfg.n_points)};
}

Outcome p_caputo_constant(const Config& cfg) {
    double worst = 0.0;
    for (double c : {0.5, 1.0, 2.71828182845904523536, 10.0})
        for (double alpha : {0.3, 0.7, 1.4}) {
            const GridFn f = sample_on([=](double) { return c; }, cfg.n_points);
            for (Side s : {Side::Left, Side::Right}) {
                const GridFn d = mult_caputo(f, FracOrder(alpha), s);
                for (double v : d.values) worst = std::max(worst, std::abs(v - 1.0));
            }
        }
    return {worst, fmt("N=%d, c in {0.5,1,e,10}, alpha in {0.3,0.7,1.4}, both sides",
                       cfg.n_points)};
}

Outcome p_rl_constant(const Config& cfg) {
    double worst = 0.0;
    for (double c : {0.5, 2.71828182845904523536})
        for (double alpha : {0.5, 1.4}) {
            const GridFn f = sample_on([=](double) { return c; }, cfg.n_points);
            const GridFn d = mult_rl_derivative(f, FracOrder(alpha), Side::Left);
            for (int i = 0; i < f.grid.n_points; ++i) {
                const double x = f.grid.point(i);
                if (x < 0.05) continue;
                worst = std::max(worst, rel_err(d.values[i],
                                                constant_mult_rl_value(c, alpha, x)));
            }
        }
    return {worst, fmt("N=%d, c in {0.5,e}, alpha in {0.5,1.4}, x >= 0.05", cfg.n_points)};
}

Outcome p_caputo_inversion(const Config& cfg, Side side) {
    const GridFn f = sample_on(kSmooth, cfg.n_points);
    const int edge = side == Side::Left ? 0 : f.grid.n_points - 1;
    std::vector<double> target(f.grid.n_points);
    for (int i = 0; i < f.grid.n_points; ++i)
        target[i] = f.values[i] / f.values[edge];
    double worst = 0.0;
    for (double alpha : {0.3, 0.7}) {
        const FracOrder a(alpha);
        const GridFn inv = mult_rl_integral(mult_caputo(f, a, side), a, side);
        worst = std::max(worst, max_rel(inv, target));
    }
    return {worst, fmt("N=%d, f=e^{sin t+2}, alpha in {0.3,0.7}, %s", cfg.n_points,
                       side == Side::Left ? "left" : "right")};
}

Outcome p_conformable_inverse_ab(const Config& cfg, Side side) {
    const GridFn f = sample_on(kSmooth, cfg.n_points);
    double worst = 0.0;
    for (double alpha : {0.25, 0.5, 0.9}) {
        const GridFn inv =
            mult_conformable_derivative(mult_conformable_integral(f, alpha, side), alpha, side);
        // differentiating the weakly singular antiderivative is meaningless in
        // the innermost 5% next to the terminal; check outside it
        const double lo = side == Side::Left ? 0.05 : 0.0;
        const double hi = side == Side::Left ? 1.0 : 0.95;
        worst = std::max(worst, max_rel(inv, f.values, lo, hi));
    }
    return {worst, fmt("N=%d, alpha in {0.25,0.5,0.9}, %s, 5%% terminal exclusion",
                       cfg.n_points, side == Side::Left ? "left" : "right")};
}

Outcome p_conformable_inverse_cd(const Config& cfg, Side side) {
    const GridFn f = sample_on(kSmooth, cfg.n_points);
    const int edge = side == Side::Left ? 0 : f.grid.n_points - 1;
    std::vector<double> target(f.grid.n_points);
    for (int i = 0; i < f.grid.n_points; ++i)
        target[i] = f.values[i] / f.values[edge];
    double worst = 0.0;
    for (double alpha : {0.25, 0.5, 0.9}) {
        const GridFn inv =
            mult_conformable_integral(mult_conformable_derivative(f, alpha, side), alpha, side);
        worst = std::max(worst, max_rel(inv, target));
    }
    return {worst, fmt("N=%d, alpha in {0.25,0.5,0.9}, %s", cfg.n_points,
                       side == Side::Left ? "left" : "right")};
}

Outcome p_higher_conformable(const Config& cfg, Side side) {
    const double alpha = 1.5;
    const GridFn f = sample_on(kSmooth, cfg.n_points);
    const GridFn inv =
        mult_conformable_integral(mult_conformable_derivative(f, alpha, side), alpha, side);
    // denominator: product over k = 0..n of e^{g^{(k)}(edge) (+-(dist))^k / k!},
    // n = 1, with g = sin t + 2 so g' = cos t
    std::vector<double> target(f.grid.n_points);
    const double edge_x = side == Side::Left ? 0.0 : 1.0;
    const double g0 = std::sin(edge_x) + 2.0, g1 = std::cos(edge_x);
    for (int i = 0; i < f.grid.n_points; ++i) {
        const double x = f.grid.point(i);
        const double term = side == Side::Left ? g1 * (x - edge_x) : -g1 * (edge_x - x);
        target[i] = f.values[i] / (std::exp(g0) * std::exp(term));
    }
    const double worst = max_rel(inv, target);
    return {worst, fmt("N=%d, alpha=1.5, f=e^{sin t+2}, %s", cfg.n_points,
                       side == Side::Left ? "left" : "right")};
}

Outcome p_gl_matches_rl(const Config&, bool derivative) {
    std::vector<double> hs, errs;
    for (int k = 8; k <= 12; ++k) {
        const int n = (1 << k) + 1;
        const GridFn g = sample([](double t) { return std::sin(t) + 2.0; },
                                make_grid({0.0, 1.0}, n), false);
        const FracOrder a(0.5);
        const GridFn gl = derivative ? gl_derivative(g, a, Side::Left)
                                     : gl_integral(g, 0.5, Side::Left);
        const GridFn rl = derivative ? rl_derivative(g, a, Side::Left)
                                     : rl_integral(g, a, Side::Left);
        double err = 0.0;
        for (int i = 0; i < n; ++i) {
            if (g.grid.point(i) < 0.05) continue;
            err = std::max(err, std::abs(gl.values[i] - rl.values[i]));
        }
        hs.push_back(1.0 / (n - 1));
        errs.push_back(err);
    }
    const double slope = loglog_slope(hs, errs);
    const double finest = errs.back();
    return {slope >= 0.9 ? finest : kInf,
            fmt("ladder h=2^-8..2^-12, slope=%.3f, finest err=%.2e", slope, finest)};
}

Outcome p_cauchy_integer_reduction(const Config& cfg) {
    const GridFn g = sample([](double t) { return std::sin(t); },
                            make_grid({0.0, 1.0}, cfg.n_points), false);
    double worst = 0.0;
    for (int n : {1, 2, 3})
        for (Side s : {Side::Left, Side::Right}) {
            const GridFn rl = rl_integral(g, FracOrder(static_cast<double>(n)), s);
            const GridFn it = cauchy_iterated_integral(g, n, s);
            for (int i = 0; i < cfg.n_points; ++i)
                worst = std::max(worst, std::abs(rl.values[i] - it.values[i]));
        }
    return {worst, fmt("N=%d, g=sin t, n in {1,2,3}, both sides", cfg.n_points)};
}

Outcome p_power_law_oracle(const Config& cfg) {
    const double alpha = 0.5, beta = 1.5;
    double worst = 0.0;
    for (Side s : {Side::Left, Side::Right}) {
        const double terminal = s == Side::Left ? 0.0 : 1.0;
        const GridFn f = sample_on(
            [&](double t) {
                const double d = s == Side::Left ? t - terminal : terminal - t;
                return std::exp(std::pow(d, beta - 1.0));
            },
            cfg.n_points);
        const GridFn mi = mult_rl_integral(f, FracOrder(alpha), s);
        const PowerLawCase c{alpha, beta, s, PowerLawCase::Kind::Integral};
        for (int i = 0; i < cfg.n_points; ++i) {
            const double x = f.grid.point(i);
            const double frac = s == Side::Left ? x : 1.0 - x;
            if (frac < 0.05) continue;
            // log-domain comparison of the exponents
            const double ref = std::log(power_law_mult_value(c, terminal, x));
            worst = std::max(worst, rel_err(std::log(mi.values[i]), ref));
        }
    }
    return {worst, fmt("N=%d, alpha=0.5, beta=1.5, both sides, x >= 0.05 from terminal",
                       cfg.n_points)};
}

Outcome p_quotient_convergence(const Config& cfg) {
    Rng rng(cfg.seed);
    const auto fn = random_positive(rng);
    std::vector<double> hs, errs;
    for (int k = 8; k <= 12; ++k) {
        const int n = (1 << k) + 1;
        const GridFn f = sample_on(fn, n);
        const GridFn qf = mult_derivative_limit_quotient(f, Direction::Forward, f.grid.h);
        const GridFn qb = mult_derivative_limit_quotient(f, Direction::Backward, f.grid.h);
        double err = 0.0;
        for (int i = 1; i + 1 < n; ++i)
            err = std::max(err, std::abs(std::log(qf.values[i]) - std::log(qb.values[i])));
        hs.push_back(f.grid.h);
        errs.push_back(err);
    }
    const double slope = loglog_slope(hs, errs);
    const double finest = errs.back();
    return {slope >= 0.9 ? finest : kInf,
            fmt("ladder h=2^-8..2^-12, slope=%.3f, finest |log fwd - log bwd|=%.2e", slope,
                finest)};
}

struct Property {
    const char* name;
    double tolerance;
    int default_n;  // 0: property controls its own grids
    std::function<Outcome(const Config&)> check;
};

const std::vector<Property>& registry() {
    static const std::vector<Property> props = {
        {"lift_identity", 5e-3, 4097, [](const Config& c) { return p_lift_identity(c); }},
        {"product_rule", 1e-10, 2049, [](const Config& c) { return p_product_rule(c); }},
        {"caputo_constant", 1e-12, 2049,
         [](const Config& c) { return p_caputo_constant(c); }},
        {"rl_constant", 1e-4, 2049, [](const Config& c) { return p_rl_constant(c); }},
        {"caputo_inversion_left", 1e-3, 2049,
         [](const Config& c) { return p_caputo_inversion(c, Side::Left); }},
        {"caputo_inversion_right", 1e-3, 2049,
         [](const Config& c) { return p_caputo_inversion(c, Side::Right); }},
        {"conformable_inverse_a", 1e-4, 2049,
         [](const Config& c) { return p_conformable_inverse_ab(c, Side::Left); }},
        {"conformable_inverse_b", 1e-4, 2049,
         [](const Config& c) { return p_conformable_inverse_ab(c, Side::Right); }},
        {"conformable_inverse_c", 1e-4, 2049,
         [](const Config& c) { return p_conformable_inverse_cd(c, Side::Left); }},
        {"conformable_inverse_d", 1e-4, 2049,
         [](const Config& c) { return p_conformable_inverse_cd(c, Side::Right); }},
        {"higher_conformable_a", 1e-3, 2049,
         [](const Config& c) { return p_higher_conformable(c, Side::Left); }},
        {"higher_conformable_b", 1e-3, 2049,
         [](const Config& c) { return p_higher_conformable(c, Side::Right); }},
        {"gl_matches_rl_derivative", 5e-3, 0,
         [](const Config& c) { return p_gl_matches_rl(c, true); }},
        {"gl_matches_rl_integral", 5e-3, 0,
         [](const Config& c) { return p_gl_matches_rl(c, false); }},
        {"cauchy_integer_reduction", 1e-6, 2049,
         [](const Config& c) { return p_cauchy_integer_reduction(c); }},
        {"power_law_oracle", 1e-3, 2049,
         [](const Config& c) { return p_power_law_oracle(c); }},
        {"mult_deriv_quotient_convergence", 5e-3, 0,
         [](const Config& c) { return p_quotient_convergence(c); }},
    };
    return props;
}

}  // namespace

const std::vector<std::string>& property_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> v;
        for (const auto& p : registry()) v.emplace_back(p.name);
        return v;
    }();
    return names;
}

std::vector<PropertyReport> run_suite(const std::vector<std::string>& names, int n_points,
                                      std::uint64_t seed) {
    std::vector<PropertyReport> reports;
    reports.reserve(names.size());
    for (const std::string& name : names) {
        const Property* prop = nullptr;
        for (const auto& p : registry())
            if (name == p.name) {
                prop = &p;
                break;
            }
        if (!prop) throw UnknownProperty("unknown property '" + name + "'");

        Config cfg;
        cfg.n_points = n_points > 0 && prop->default_n > 0 ? n_points : prop->default_n;
        cfg.seed = seed + 0x9e3779b97f4a7c15ull;  // avoid the all-zero mt19937 state
        const Outcome oc = prop->check(cfg);

        PropertyReport r;
        r.name = name;
        r.observed_error = oc.error;
        r.tolerance = prop->tolerance;
        r.passed = oc.error <= prop->tolerance;
        r.config_summary = oc.summary;
        reports.push_back(std::move(r));
    }
    return reports;
}

}  // namespace mfc
