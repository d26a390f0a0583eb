#include <cmath>
#include <random>

#include <doctest.h>

#include "mfc/reference.hpp"
#include "support/oracles.hpp"

using namespace mfc;

TEST_CASE("gamma at known points") {
    CHECK(gamma_fn(1.0) == doctest::Approx(1.0).epsilon(1e-13));
    CHECK(gamma_fn(5.0) == doctest::Approx(24.0).epsilon(1e-13));
    CHECK(gamma_fn(0.5) == doctest::Approx(1.7724538509055160).epsilon(1e-13));
    CHECK(gamma_fn(1.5) == doctest::Approx(0.8862269254527580).epsilon(1e-13));
    CHECK_THROWS_AS(gamma_fn(0.0), PoleError);
    CHECK_THROWS_AS(gamma_fn(-2.0), PoleError);
    CHECK(reciprocal_gamma(-3.0) == 0.0);
    CHECK(reciprocal_gamma(2.0) == doctest::Approx(1.0).epsilon(1e-13));
}

TEST_CASE("gamma against the standard library on [0.5, 20]") {
    std::mt19937_64 gen(7);
    for (int i = 0; i < 300; ++i) {
        const double x = 0.5 + 19.5 * ((gen() >> 11) * 0x1.0p-53);
        CHECK(std::abs(gamma_fn(x) / std::tgamma(x) - 1.0) <= 1e-12);
    }
}

TEST_CASE("gamma recurrence property") {
    std::mt19937_64 gen(11);
    for (int i = 0; i < 200; ++i) {
        const double x = 0.5 + 9.5 * ((gen() >> 11) * 0x1.0p-53);
        CHECK(std::abs(gamma_fn(x + 1.0) / (x * gamma_fn(x)) - 1.0) <= 1e-12);
    }
}

TEST_CASE("power-law closed forms") {
    // alpha=1, beta=2: ordinary integral of (t-a)
    const PowerLawCase c1{1.0, 2.0, Side::Left, PowerLawCase::Kind::Integral};
    CHECK(power_law_mult_value(c1, 0.0, 1.0) ==
          doctest::Approx(1.6487212707001281).epsilon(1e-12));

    const PowerLawCase c2{0.5, 1.5, Side::Left, PowerLawCase::Kind::Integral};
    CHECK(power_law_mult_value(c2, 0.0, 1.0) ==
          doctest::Approx(2.4259590371681936).epsilon(1e-12));

    const PowerLawCase c3{0.5, 3.0, Side::Left, PowerLawCase::Kind::Derivative};
    CHECK(power_law_mult_value(c3, 0.0, 1.0) ==
          doctest::Approx(4.5019271296096835).epsilon(1e-12));

    const PowerLawCase pole{1.5, 1.5, Side::Left, PowerLawCase::Kind::Derivative};
    CHECK_THROWS_AS(power_law_mult_value(pole, 0.0, 1.0), PoleError);
    CHECK_THROWS_AS(power_law_mult_value(c2, 0.0, -0.5), WrongSide);
}

TEST_CASE("power-law integral exponent against brute-force quadrature") {
    // exponent of the multiplicative value: (1/Gamma(alpha)) int_0^x (x-t)^{alpha-1} t^{beta-1} dt
    const double alpha = 0.5, beta = 1.5;
    const double ga = std::tgamma(alpha);
    for (double x : {0.3, 0.7, 1.0}) {
        const double quad = oracles::tanh_sinh(
                                [&](double dl, double dr) {
                                    return std::pow(dr, alpha - 1.0) *
                                           std::pow(dl, beta - 1.0);
                                },
                                0.0, x) /
                            ga;
        const double closed =
            std::log(power_law_mult_value({alpha, beta, Side::Left,
                                           PowerLawCase::Kind::Integral},
                                          0.0, x));
        CHECK(std::abs(quad - closed) <= 1e-9);
    }
}

TEST_CASE("constant closed form") {
    CHECK(constant_mult_rl_value(2.718281828459045, 0.5, 1.0) ==
          doctest::Approx(1.7580224749162900).epsilon(1e-12));
    CHECK(constant_mult_rl_value(1.0, 0.3, 0.7) == 1.0);
    CHECK(constant_mult_rl_value(5.0, 1.0, 0.4) == 1.0);
    CHECK(constant_mult_rl_value(5.0, 2.0, 0.4) == 1.0);
    CHECK_THROWS_AS(constant_mult_rl_value(-1.0, 0.5, 1.0), NotPositive);
}

TEST_CASE("taylor tail product") {
    const UniformGrid g = make_grid({0.0, 1.0}, 513);

    const GridFn c = sample([](double) { return 3.5; }, g, true);
    for (double v : taylor_tail_product(c, 1, Side::Left).values)
        CHECK(v == doctest::Approx(3.5).epsilon(1e-13));
    for (double v : taylor_tail_product(c, 3, Side::Left).values)
        CHECK(v == doctest::Approx(3.5).epsilon(1e-9));

    // f = e^t: g = t, so the degree-1 tail reproduces f on both sides
    const GridFn fe = sample([](double t) { return std::exp(t); }, g, true);
    const GridFn left = taylor_tail_product(fe, 2, Side::Left);
    const GridFn right = taylor_tail_product(fe, 2, Side::Right);
    for (int i = 0; i < g.n_points; ++i) {
        CHECK(left.values[i] == doctest::Approx(fe.values[i]).epsilon(1e-9));
        CHECK(right.values[i] == doctest::Approx(fe.values[i]).epsilon(1e-9));
    }

    // n=1: the constant function f(terminal)
    const GridFn n1 = taylor_tail_product(fe, 1, Side::Right);
    for (double v : n1.values)
        CHECK(v == doctest::Approx(std::exp(1.0)).epsilon(1e-13));
}
