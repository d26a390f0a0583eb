#include <cmath>

#include <doctest.h>

#include "mfc/grid.hpp"

using namespace mfc;

TEST_CASE("make_grid basics") {
    const UniformGrid g = make_grid({0.0, 1.0}, 3);
    CHECK(g.h == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(g.point(0) == 0.0);
    CHECK(g.point(1) == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(g.point(2) == doctest::Approx(1.0).epsilon(1e-15));

    const UniformGrid g2 = make_grid({2.0, 4.0}, 5);
    CHECK(g2.h == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(g2.point(4) == doctest::Approx(4.0).epsilon(1e-15));

    CHECK_THROWS_AS(make_grid({1.0, 1.0}, 4), DegenerateInterval);
    CHECK_THROWS_AS(make_grid({2.0, 1.0}, 4), DegenerateInterval);
    CHECK_THROWS_AS(make_grid({0.0, 1.0}, 2), TooFewPoints);
}

TEST_CASE("grid spacing is uniform to roundoff") {
    const UniformGrid g = make_grid({0.1, 0.93}, 1025);
    for (int i = 0; i + 1 < g.n_points; ++i)
        CHECK(std::abs((g.point(i + 1) - g.point(i)) / g.h - 1.0) < 1e-12);
    CHECK(std::abs(g.point(g.n_points - 1) - 0.93) < 4e-16);
}

TEST_CASE("FracOrder bracket convention") {
    CHECK(FracOrder(0.5).n == 1);
    CHECK(FracOrder(0.999).n == 1);
    CHECK(FracOrder(1.0).n == 2);
    CHECK(FracOrder(1.4).n == 2);
    CHECK(FracOrder(3.0).n == 4);
    CHECK_THROWS_AS(FracOrder(0.0), NonPositiveOrder);
    CHECK_THROWS_AS(FracOrder(-0.5), NonPositiveOrder);
}

TEST_CASE("sample positivity and finiteness") {
    const UniformGrid g = make_grid({0.0, 1.0}, 11);
    const GridFn f = sample([](double t) { return std::exp(t); }, g, true);
    CHECK(f.positive);
    for (double v : f.values) {
        CHECK(v >= 1.0);
        CHECK(v <= 2.7182818284590452 + 1e-12);
    }

    CHECK_THROWS_AS(sample([](double t) { return t - 0.5; }, g, true),
                    PositivityViolation);
    const GridFn ones = sample([](double) { return 1.0; }, g, false);
    for (double v : ones.values) CHECK(v == 1.0);
    CHECK_THROWS_AS(
        sample([](double t) { return t == 0.5 ? INFINITY : 1.0; }, g, false),
        NonFiniteValue);
}

TEST_CASE("log_lift / exp_drop") {
    const UniformGrid g = make_grid({0.0, 1.0}, 257);
    const GridFn one = sample([](double) { return 1.0; }, g, true);
    for (double v : log_lift(one).values) CHECK(v == 0.0);

    const GridFn fe = sample([](double) { return 2.718281828459045; }, g, true);
    for (double v : log_lift(fe).values) CHECK(v == doctest::Approx(1.0).epsilon(1e-14));

    const GridFn f = sample([](double t) { return std::exp(t * t); }, g, true);
    const GridFn lifted = log_lift(f);
    for (int i = 0; i < g.n_points; ++i)
        CHECK(lifted.values[i] == doctest::Approx(g.point(i) * g.point(i)).epsilon(1e-13));

    GridFn unflagged = f;
    unflagged.positive = false;
    CHECK_THROWS_AS(log_lift(unflagged), NotPositive);

    // round trip
    const GridFn back = exp_drop(lifted);
    for (int i = 0; i < g.n_points; ++i)
        CHECK(back.values[i] == doctest::Approx(f.values[i]).epsilon(1e-13));

    GridFn huge;
    huge.grid = g;
    huge.values.assign(g.n_points, 1000.0);
    CHECK_THROWS_AS(exp_drop(huge), Overflow);

    GridFn zero;
    zero.grid = g;
    zero.values.assign(g.n_points, 0.0);
    for (double v : exp_drop(zero).values) CHECK(v == 1.0);
}

TEST_CASE("finite_diff stencils") {
    const UniformGrid g = make_grid({0.0, 1.0}, 257);
    const GridFn lin = sample([](double t) { return t; }, g, false);
    for (double v : finite_diff(lin, 1).values)
        CHECK(v == doctest::Approx(1.0).epsilon(1e-12));

    const GridFn quad = sample([](double t) { return t * t; }, g, false);
    const GridFn d1 = finite_diff(quad, 1);
    for (int i = 0; i < g.n_points; ++i)
        CHECK(d1.values[i] == doctest::Approx(2.0 * g.point(i)).epsilon(1e-9));
    for (double v : finite_diff(quad, 2).values) CHECK(std::abs(v - 2.0) < 1e-9);

    const UniformGrid gs = make_grid({0.0, 1.0}, 1025);
    const GridFn s = sample([](double t) { return std::sin(t); }, gs, false);
    const GridFn ds = finite_diff(s, 1);
    double worst = 0.0;
    for (int i = 0; i < gs.n_points; ++i)
        worst = std::max(worst, std::abs(ds.values[i] - std::cos(gs.point(i))));
    CHECK(worst <= 1e-5);

    CHECK_THROWS_AS(finite_diff(sample([](double) { return 1.0; }, make_grid({0, 1}, 3), false), 2),
                    GridTooCoarse);
}
