// Times the OpenMP kernels against the serial reference implementations.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "mfc/classical.hpp"
#include "mfc/kernels.hpp"

namespace {

using Clock = std::chrono::steady_clock;

double best_of(int reps, const std::function<void()>& fn) {
    double best = 1e300;
    for (int r = 0; r < reps; ++r) {
        const auto t0 = Clock::now();
        fn();
        const auto t1 = Clock::now();
        best = std::min(best, std::chrono::duration<double, std::milli>(t1 - t0).count());
    }
    return best;
}

}  // namespace

int main() {
#ifdef _OPENMP
    std::printf("# OpenMP enabled, max threads = %d\n", omp_get_max_threads());
#else
    std::printf("# built without OpenMP; parallel kernels run serially\n");
#endif
    std::printf("%-22s %8s %12s %12s %9s\n", "kernel", "N", "serial ms", "parallel ms",
                "speedup");

    volatile double sink = 0.0;
    for (int N : {1025, 2049, 4097, 8193}) {
        const double h = 1.0 / (N - 1);
        std::vector<double> g(N);
        for (int i = 0; i < N; ++i) g[i] = std::sin(i * h) + 2.0;

        const double ts = best_of(3, [&] {
            auto v = mfc::kernels::serial::rl_integral_left(g, h, 0.5);
            sink = sink + v.back();
        });
        const double tp = best_of(3, [&] {
            auto v = mfc::kernels::rl_integral_left(g, h, 0.5);
            sink = sink + v.back();
        });
        std::printf("%-22s %8d %12.2f %12.2f %8.2fx\n", "rl_integral", N, ts, tp, ts / tp);

        const mfc::GLWeights w = mfc::gl_weights(0.5, N - 1);
        const double scale = std::pow(h, -0.5);
        const double cs = best_of(3, [&] {
            auto v = mfc::kernels::serial::convolve_left(g, w.w, scale);
            sink = sink + v.back();
        });
        const double cp = best_of(3, [&] {
            auto v = mfc::kernels::convolve_left(g, w.w, scale);
            sink = sink + v.back();
        });
        std::printf("%-22s %8d %12.2f %12.2f %8.2fx\n", "gl_convolution", N, cs, cp,
                    cs / cp);
    }
    return 0;
}
