// Compares the serial reference lane against the OpenMP lane on the two
// heaviest kernels and reports speedup plus the max deviation (must be 0:
// both lanes run identical arithmetic in a fixed order).

#include <chrono>
#include <cmath>
#include <cstdio>

#include "nlk/fields.hpp"
#include "nlk/operators.hpp"
#include "nlk/parallel.hpp"
#include "nlk/transforms.hpp"

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct LaneResult {
    double seconds;
    std::vector<double> values;
};

template <class F>
LaneResult timed(F&& run) {
    const auto t0 = Clock::now();
    std::vector<double> values = run();
    return {seconds_since(t0), std::move(values)};
}

double max_abs_diff(const std::vector<double>& a, const std::vector<double>& b) {
    double worst = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) worst = std::max(worst, std::abs(a[i] - b[i]));
    return worst;
}

void report(const char* name, const LaneResult& serial, const LaneResult& parallel_lane) {
    std::printf("%-28s serial %8.3f s   openmp %8.3f s   speedup %5.2fx   max|diff| %g\n", name,
                serial.seconds, parallel_lane.seconds, serial.seconds / parallel_lane.seconds,
                max_abs_diff(serial.values, parallel_lane.values));
}

} // namespace

int main() {
    using nlk::parallel::Exec;
    std::printf("nonlocal-kit benchmark: serial reference vs OpenMP lane (threads: %d)\n",
                nlk::parallel::max_threads());

    nlk::QuadConfig cfg;
    cfg.abs_tol = cfg.rel_tol = 1e-8;

    {
        // Batch fractional Laplacian of a plane wave in n = 2.
        const nlk::Vec k{1.0, 0.5};
        const nlk::ScalarField u = nlk::cosine_field(k);
        std::vector<nlk::Vec> pts;
        for (int i = 0; i < 24; ++i) pts.push_back({0.1 * i, 0.05 * i});
        const auto serial = timed([&] { return frac_laplacian_batch(u, pts, 1.0, cfg, Exec::Serial); });
        const auto par = timed([&] { return frac_laplacian_batch(u, pts, 1.0, cfg, Exec::Auto); });
        report("frac_laplacian x24 (n=2)", serial, par);
    }

    {
        // Radial scan of the conformal integral equation in n = 5.
        const nlk::Params params(5, 1, 1.0, 0.0, 4.0);
        const nlk::Bubble bubble(params, 1.0, nlk::zero_vec(5));
        const nlk::ScalarField rhs = nlk::bubble_rhs_field(bubble);
        std::vector<nlk::Vec> pts;
        for (int i = 0; i < 32; ++i) pts.push_back((0.125 * i) * nlk::basis_vec(5, 0));
        const auto serial =
            timed([&] { return riesz_potential_batch(rhs, 3.0, pts, cfg, Exec::Serial); });
        const auto par = timed([&] { return riesz_potential_batch(rhs, 3.0, pts, cfg, Exec::Auto); });
        report("riesz_potential x32 (n=5)", serial, par);
    }

    return 0;
}
