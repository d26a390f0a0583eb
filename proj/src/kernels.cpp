#include "mfc/kernels.hpp"

#include <cmath>

#include "mfc/reference.hpp"

namespace mfc::kernels {

namespace {

// Weight tables for the product-trapezoidal rule. With p = alpha+1 and
// s(m) = m^p, the value at node i is
//
//   h^alpha / Gamma(alpha+2) * [ a0(i) g0 + sum_{j=1}^{i-1} c[i-j] g_j + g_i ]
//
// where c[m] = s(m+1) - 2 s(m) + s(m-1) and
// a0(i) = s(i-1) - (i - alpha - 1) i^alpha.
struct RlWeights {
    std::vector<double> c;     // c[m], m = 1..n-1 (index m)
    std::vector<double> a0;    // a0[i], i = 1..n-1 (index i)
    double scale;

    RlWeights(int n, double h, double alpha) : c(n), a0(n) {
        const double p = alpha + 1.0;
        std::vector<double> s(n + 1);
        for (int m = 0; m <= n; ++m) s[m] = std::pow(static_cast<double>(m), p);
        for (int m = 1; m < n; ++m) c[m] = s[m + 1] - 2.0 * s[m] + s[m - 1];
        for (int i = 1; i < n; ++i)
            a0[i] = s[i - 1] - (i - alpha - 1.0) * std::pow(static_cast<double>(i), alpha);
        scale = std::pow(h, alpha) / gamma_fn(alpha + 2.0);
    }
};

double rl_point(const RlWeights& w, std::span<const double> g, int i) {
    double acc = w.a0[i] * g[0];
    for (int j = 1; j < i; ++j) acc += w.c[i - j] * g[j];
    acc += g[i];
    return w.scale * acc;
}

double conv_point(std::span<const double> g, std::span<const double> w, double scale,
                  int i) {
    double acc = 0.0;
    for (int r = 0; r <= i; ++r) acc += w[r] * g[i - r];
    return scale * acc;
}

}  // namespace

std::vector<double> rl_integral_left(std::span<const double> g, double h, double alpha) {
    const int n = static_cast<int>(g.size());
    std::vector<double> out(n, 0.0);
    const RlWeights w(n, h, alpha);
#pragma omp parallel for schedule(static, 32)
    for (int i = 1; i < n; ++i) out[i] = rl_point(w, g, i);
    return out;
}

std::vector<double> convolve_left(std::span<const double> g, std::span<const double> w,
                                  double scale) {
    const int n = static_cast<int>(g.size());
    std::vector<double> out(n, 0.0);
#pragma omp parallel for schedule(static, 32)
    for (int i = 0; i < n; ++i) out[i] = conv_point(g, w, scale, i);
    return out;
}

namespace serial {

std::vector<double> rl_integral_left(std::span<const double> g, double h, double alpha) {
    const int n = static_cast<int>(g.size());
    std::vector<double> out(n, 0.0);
    const RlWeights w(n, h, alpha);
    for (int i = 1; i < n; ++i) out[i] = rl_point(w, g, i);
    return out;
}

std::vector<double> convolve_left(std::span<const double> g, std::span<const double> w,
                                  double scale) {
    const int n = static_cast<int>(g.size());
    std::vector<double> out(n, 0.0);
    for (int i = 0; i < n; ++i) out[i] = conv_point(g, w, scale, i);
    return out;
}

}  // namespace serial

}  // namespace mfc::kernels
