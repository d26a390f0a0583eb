#pragma once

// Parser corpus and round-trip fuzzing shared by the unit tests and the
// acceptance suite.

#include <cmath>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "mfc/expr.hpp"

namespace parser_cases {

struct Case {
    const char* text;
    double t;
    double expected;
};

// Exact precedence / associativity / evaluation corpus.
inline const std::vector<Case>& corpus() {
    static const std::vector<Case> cases = {
        {"1+2*3", 0.0, 7.0},
        {"(1+2)*3", 0.0, 9.0},
        {"2^3^2", 0.0, 512.0},
        {"2^2^3", 0.0, 256.0},
        {"2^3", 0.0, 8.0},
        {"-2^2", 0.0, -4.0},
        {"(-2)^2", 0.0, 4.0},
        {"2^-1", 0.0, 0.5},
        {"2^-2", 0.0, 0.25},
        {"-2-3", 0.0, -5.0},
        {"2-3-4", 0.0, -5.0},
        {"1-2+3", 0.0, 2.0},
        {"12/4/3", 0.0, 1.0},
        {"6/2*3", 0.0, 9.0},
        {"2*3^2", 0.0, 18.0},
        {"3*-2", 0.0, -6.0},
        {"--2", 0.0, 2.0},
        {"-(2+3)", 0.0, -5.0},
        {"t^2+1", 3.0, 10.0},
        {"t*t", 1.5, 2.25},
        {"2*t+1", 2.0, 5.0},
        {"exp(0)", 0.0, 1.0},
        {"ln(e)", 0.0, 1.0},
        {"sin(0)", 0.0, 0.0},
        {"cos(0)", 0.0, 1.0},
        {"sqrt(4)", 0.0, 2.0},
        {"abs(-3.5)", 0.0, 3.5},
        {"exp(sin(t))", 0.0, 1.0},
        {"pi", 0.0, 3.14159265358979323846},
        {"2*pi", 0.0, 6.28318530717958647692},
        {"e^2", 0.0, 7.38905609893065022723},
        {"1/2", 0.0, 0.5},
        {"10/4", 0.0, 2.5},
        {"0.5^2", 0.0, 0.25},
        {".5+1", 0.0, 1.5},
        {" 1 + 2 ", 0.0, 3.0},
        {"((((5))))", 0.0, 5.0},
        {"exp((t-1)^0.5)", 1.0, 1.0},
    };
    return cases;
}

// Random well-formed expression text, grammar-directed.
class Generator {
  public:
    explicit Generator(std::uint64_t seed) : gen_(seed) {}

    std::string expr(int depth = 0) {
        std::string s = term(depth);
        while (depth < 3 && chance(3)) s += (chance(2) ? "+" : "-") + term(depth);
        return s;
    }

    double uniform(double lo, double hi) {
        return lo + (hi - lo) * ((gen_() >> 11) * 0x1.0p-53);
    }

  private:
    std::mt19937_64 gen_;

    bool chance(int one_in) { return gen_() % one_in == 0; }
    int pick(int n) { return static_cast<int>(gen_() % n); }

    std::string term(int depth) {
        std::string s = factor(depth);
        while (depth < 3 && chance(4)) s += (chance(2) ? "*" : "/") + factor(depth);
        return s;
    }

    std::string factor(int depth) {
        if (chance(6)) return "-" + factor(depth + 1);
        std::string s = primary(depth);
        // keep exponents tame so values stay comparable at 1e-12
        if (chance(5)) s += "^" + std::to_string(pick(3));
        return s;
    }

    std::string primary(int depth) {
        if (depth >= 3 || chance(2)) {
            switch (pick(4)) {
                case 0: return "t";
                case 1: return "e";
                case 2: return "pi";
                default: {
                    char buf[16];
                    std::snprintf(buf, sizeof buf, "%.1f", 0.5 + 0.5 * pick(5));
                    return buf;
                }
            }
        }
        static const char* fns[] = {"exp", "ln", "sin", "cos", "sqrt", "abs"};
        if (chance(3)) return std::string(fns[pick(6)]) + "(" + expr(depth + 1) + ")";
        return "(" + expr(depth + 1) + ")";
    }
};

// Parse -> serialize -> reparse, then compare evaluation at 10 points drawn
// from the generator. Domain errors must occur identically on both sides.
// Returns the number of equivalent round trips out of `count`.
inline int fuzz_round_trips(int count, std::uint64_t seed, double tol = 1e-12) {
    Generator gen(seed);
    int good = 0;
    for (int i = 0; i < count; ++i) {
        const std::string text = gen.expr();
        bool ok = true;
        try {
            const mfc::Expr e1 = mfc::parse_expr(text);
            const mfc::Expr e2 = mfc::parse_expr(e1.str());
            for (int k = 0; k < 10 && ok; ++k) {
                const double t = gen.uniform(0.1, 2.0);
                double v1 = 0, v2 = 0;
                bool t1 = false, t2 = false;
                try {
                    v1 = e1.eval(t);
                } catch (const mfc::EvalDomainError&) {
                    t1 = true;
                }
                try {
                    v2 = e2.eval(t);
                } catch (const mfc::EvalDomainError&) {
                    t2 = true;
                }
                if (t1 != t2)
                    ok = false;
                else if (!t1 && !(std::isnan(v1) && std::isnan(v2)) &&
                         !(v1 == v2) && std::abs(v1 - v2) > tol * (1.0 + std::abs(v1)))
                    ok = false;
            }
        } catch (const mfc::Error&) {
            ok = false;  // generated text must always parse
        }
        if (ok) ++good;
    }
    return good;
}

}  // namespace parser_cases
