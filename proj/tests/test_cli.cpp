#include <cmath>
#include <cstdio>
#include <string>

#include <doctest.h>
#include <json.hpp>

#include "support/cli_runner.hpp"

using cli_runner::fields;
using cli_runner::run;

TEST_CASE("eval: constant caputo is identically 1") {
    const auto r = run("eval --op mcaputo --fn \"5\" --alpha 0.5 --a 0 --b 1 --grid 65");
    CHECK(r.exit_code == 0);
    const auto ls = r.lines();
    REQUIRE(ls.size() == 66);
    CHECK(ls[0] == "x,value");
    for (std::size_t i = 1; i < ls.size(); ++i) CHECK(fields(ls[i])[1] == "1");
}

TEST_CASE("eval: constant RL derivative with reference columns") {
    const auto r =
        run("eval --op mrl-deriv --fn \"e\" --alpha 0.5 --a 0 --b 1 --grid 257 --ref");
    CHECK(r.exit_code == 0);
    const auto ls = r.lines();
    REQUIRE(ls.size() == 258);
    CHECK(ls[0] == "x,value,reference,abs_err");
    // terminal row is singular on both columns
    CHECK(fields(ls[1])[1] == "inf");
    CHECK(fields(ls[1])[2] == "inf");
    CHECK(fields(ls[1])[3] == "0");
    double worst = 0.0;
    for (std::size_t i = 2; i < ls.size(); ++i) {
        const auto f = fields(ls[i]);
        if (std::stod(f[0]) < 0.05) continue;
        worst = std::max(worst, std::stod(f[3]));
    }
    CHECK(worst <= 1e-3);
}

TEST_CASE("eval: positivity violation exits 3") {
    const auto r = run("eval --op mrl-int --fn \"t\" --alpha 0.5 --a 0 --b 1");
    CHECK(r.exit_code == 3);
}

TEST_CASE("eval: parse and usage errors exit 2") {
    CHECK(run("eval --op mrl-int --fn \"exp(\" --alpha 0.5 --a 0 --b 1").exit_code == 2);
    CHECK(run("eval --op mrl-int --fn \"foo(t)\" --alpha 0.5 --a 0 --b 1").exit_code == 2);
    CHECK(run("eval --op nosuch --fn \"t\" --alpha 0.5 --a 0 --b 1").exit_code == 2);
    CHECK(run("eval --op mrl-int --fn \"exp(t)\" --a 0 --b 1").exit_code == 2);
    CHECK(run("eval --op mderiv --fn \"exp(t)\" --alpha 0.5 --a 0 --b 1").exit_code == 2);
    CHECK(run("eval --op mrl-int --fn \"exp(t)\" --alpha 0.5 --a 1 --b 0").exit_code == 2);
}

TEST_CASE("eval: --ref without a registered closed form exits 4") {
    const auto r =
        run("eval --op mrl-int --fn \"exp(t)\" --alpha 0.5 --a 0 --b 1 --ref");
    CHECK(r.exit_code == 4);
}

TEST_CASE("eval: json output") {
    const auto r = run(
        "eval --op mint --fn \"e\" --a 0 --b 1 --grid 33 --out json");
    CHECK(r.exit_code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["x"].size() == 33);
    CHECK(j["value"].size() == 33);
    CHECK(j["meta"]["op"] == "mint");
    CHECK(j["meta"]["grid"] == 33);
    CHECK(std::abs(j["value"][32].get<double>() - 2.718281828459045) < 1e-10);

    const auto r2 = run(
        "eval --op mint --fn \"e\" --a 0 --b 1 --grid 33 --out json");
    CHECK(r2.out == r.out);  // byte-stable
}

TEST_CASE("verify subcommand") {
    const auto r = run("verify --suite caputo_constant");
    CHECK(r.exit_code == 0);
    const auto ls = r.lines();
    REQUIRE(ls.size() == 1);
    CHECK(ls[0].rfind("PASS caputo_constant observed=", 0) == 0);
    CHECK(ls[0].find("tol=") != std::string::npos);

    CHECK(run("verify --suite nosuch").exit_code == 2);

    const auto rj = run("verify --suite caputo_constant,rl_constant --out json");
    CHECK(rj.exit_code == 0);
    const auto j = nlohmann::json::parse(rj.out);
    REQUIRE(j.size() == 2);
    CHECK(j[0]["name"] == "caputo_constant");
    CHECK(j[1]["name"] == "rl_constant");
    CHECK(j[0]["passed"] == true);
}

TEST_CASE("table subcommand") {
    const auto r = run("table --case power-int --alpha 0.5 --beta 1.5 --a 0 --b 1 --grid 257");
    CHECK(r.exit_code == 0);
    const auto ls = r.lines();
    CHECK(ls[0] == "x,numeric,closed_form,abs_err");
    REQUIRE(ls.size() == 258);
    // log-domain agreement of the two columns
    double worst = 0.0;
    for (std::size_t i = 1; i < ls.size(); ++i) {
        const auto f = fields(ls[i]);
        worst = std::max(worst,
                         std::abs(std::log(std::stod(f[1])) - std::log(std::stod(f[2]))));
    }
    CHECK(worst <= 1e-3);

    // Gamma pole in the derivative case
    CHECK(run("table --case power-deriv --alpha 1.5 --beta 1.5 --a 0 --b 1").exit_code == 4);

    const auto rc = run("table --case constant --alpha 1 --a 0 --b 1 --grid 65");
    CHECK(rc.exit_code == 0);
    const auto lc = rc.lines();
    for (std::size_t i = 1; i < lc.size(); ++i) CHECK(fields(lc[i])[2] == "1");

    CHECK(run("table --case nosuch --alpha 0.5").exit_code == 2);
}
