#include "nlk/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <vector>

#include "nlk/geometry.hpp"
#include "nlk/special_functions.hpp"

namespace nlk {

namespace {

// Gauss-Kronrod 7-15 nodes and weights (QUADPACK dqk15 values).
constexpr double kXgk[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144838258730, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr double kWgk[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr double kWg[4] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct PanelResult {
    double value;
    double error;
};

PanelResult gk15(FnRef f, double a, double b) {
    const double center = 0.5 * (a + b);
    const double hlgth = 0.5 * (b - a);

    double fv1[7];
    double fv2[7];
    const double fc = f(center);
    double resk = kWgk[7] * fc;
    double resg = kWg[3] * fc;
    double resabs = std::abs(resk);
    for (int j = 0; j < 7; ++j) {
        fv1[j] = f(center - hlgth * kXgk[j]);
        fv2[j] = f(center + hlgth * kXgk[j]);
        const double fsum = fv1[j] + fv2[j];
        resk += kWgk[j] * fsum;
        resabs += kWgk[j] * (std::abs(fv1[j]) + std::abs(fv2[j]));
        if (j % 2 == 1) resg += kWg[j / 2] * fsum;
    }
    const double reskh = resk * 0.5;
    double resasc = kWgk[7] * std::abs(fc - reskh);
    for (int j = 0; j < 7; ++j)
        resasc += kWgk[j] * (std::abs(fv1[j] - reskh) + std::abs(fv2[j] - reskh));

    resabs *= std::abs(hlgth);
    resasc *= std::abs(hlgth);
    double err = std::abs((resk - resg) * hlgth);
    if (resasc != 0.0 && err != 0.0)
        err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
    const double epmach = std::numeric_limits<double>::epsilon();
    const double uflow = std::numeric_limits<double>::min();
    if (resabs > uflow / (50.0 * epmach)) err = std::max(err, 50.0 * epmach * resabs);
    return {resk * hlgth, err};
}

struct Panel {
    double a;
    double b;
    double value;
    double error;
    int depth;
};

struct PanelWorse {
    bool operator()(const Panel& lhs, const Panel& rhs) const {
        if (lhs.error != rhs.error) return lhs.error < rhs.error;
        return lhs.a > rhs.a; // tie-break on position for a fixed processing order
    }
};

constexpr int kMaxPanels = 40000;

} // namespace

double integrate_adaptive(FnRef f, double lo, double hi, const QuadConfig& cfg) {
    cfg.validate();
    if (!(lo < hi)) throw DomainError("integrate_adaptive: requires lo < hi");
    if (!std::isfinite(lo) || !std::isfinite(hi))
        throw DomainError("integrate_adaptive: endpoints must be finite (use integrate_tail)");

    std::priority_queue<Panel, std::vector<Panel>, PanelWorse> active;
    std::vector<Panel> settled;
    settled.reserve(64);

    Panel root{lo, hi, 0.0, 0.0, 0};
    const PanelResult r0 = gk15(f, lo, hi);
    root.value = r0.value;
    root.error = r0.error;
    active.push(root);

    double sum_value = root.value;
    double sum_error = root.error;
    double settled_error = 0.0;
    int n_panels = 1;

    const double epmach = std::numeric_limits<double>::epsilon();

    while (true) {
        const double tol = std::max(cfg.abs_tol, cfg.rel_tol * std::abs(sum_value));
        if (sum_error <= tol) break;
        if (active.empty() || n_panels >= kMaxPanels) {
            // Everything splittable is split; report the best we have.
            throw QuadratureError("integrate_adaptive: tolerance not met within depth/panel budget",
                                  sum_value, sum_error);
        }
        Panel worst = active.top();
        active.pop();

        const double width = worst.b - worst.a;
        const bool too_thin = width <= 50.0 * epmach * std::max({std::abs(worst.a), std::abs(worst.b), 1.0});
        if (worst.depth >= cfg.max_depth || too_thin) {
            settled_error += worst.error;
            settled.push_back(worst);
            // Active set may still shrink the remainder; if only settled error
            // keeps us above tol we will eventually drain `active` and throw.
            if (active.empty() && settled_error > tol) {
                throw QuadratureError("integrate_adaptive: depth exhausted at singular panel",
                                      sum_value, sum_error);
            }
            continue;
        }

        const double mid = 0.5 * (worst.a + worst.b);
        const PanelResult rl = gk15(f, worst.a, mid);
        const PanelResult rr = gk15(f, mid, worst.b);
        sum_value += rl.value + rr.value - worst.value;
        sum_error += rl.error + rr.error - worst.error;
        active.push(Panel{worst.a, mid, rl.value, rl.error, worst.depth + 1});
        active.push(Panel{mid, worst.b, rr.value, rr.error, worst.depth + 1});
        ++n_panels;
    }

    // Deterministic final accumulation: panels sorted by position, Kahan sum.
    while (!active.empty()) {
        settled.push_back(active.top());
        active.pop();
    }
    std::sort(settled.begin(), settled.end(),
              [](const Panel& x, const Panel& y) { return x.a < y.a; });
    double total = 0.0;
    double comp = 0.0;
    for (const Panel& p : settled) {
        const double y = p.value - comp;
        const double t = total + y;
        comp = (t - total) - y;
        total = t;
    }
    return total;
}

double integrate_tail(FnRef f, double decay_q, double lo, const QuadConfig& cfg) {
    if (!(decay_q > 1.0))
        throw DivergenceError("integrate_tail: declared decay exponent must exceed 1");
    if (!(lo > 0.0)) throw DomainError("integrate_tail: lo must be positive");
    auto mapped = [&](double t) {
        const double r = lo / t;
        return f(r) * lo / (t * t);
    };
    return integrate_adaptive(mapped, 0.0, 1.0, cfg);
}

double integrate_power_endpoints(FnRef g, double lo, double hi, double e_lo, double e_hi,
                                 const QuadConfig& cfg) {
    if (!(lo < hi)) throw DomainError("integrate_power_endpoints: requires lo < hi");
    if (!(e_lo > -1.0 && e_hi > -1.0))
        throw DivergenceError("integrate_power_endpoints: endpoint exponents must exceed -1");

    const double mid = 0.5 * (lo + hi);
    double left;
    if (e_lo == 0.0) {
        auto h = [&](double x) { return g(x) * std::pow(hi - x, e_hi); };
        left = integrate_adaptive(h, lo, mid, cfg);
    } else {
        const double p = 1.0 + e_lo;
        const double w_max = std::pow(mid - lo, p);
        auto h = [&](double w) {
            const double x = lo + std::pow(w, 1.0 / p);
            return g(x) * std::pow(hi - x, e_hi) / p;
        };
        left = integrate_adaptive(h, 0.0, w_max, cfg);
    }

    double right;
    if (e_hi == 0.0) {
        auto h = [&](double x) { return g(x) * std::pow(x - lo, e_lo); };
        right = integrate_adaptive(h, mid, hi, cfg);
    } else {
        const double p = 1.0 + e_hi;
        const double w_max = std::pow(hi - mid, p);
        auto h = [&](double w) {
            const double x = hi - std::pow(w, 1.0 / p);
            return g(x) * std::pow(x - lo, e_lo) / p;
        };
        right = integrate_adaptive(h, 0.0, w_max, cfg);
    }
    return left + right;
}

double sphere_kernel_average(double rho, double r, double lambda, int n, const QuadConfig& cfg) {
    if (n < 2) throw DomainError("sphere_kernel_average: requires n >= 2");
    if (!(r > 0.0)) throw DomainError("sphere_kernel_average: requires r > 0");
    if (!(rho >= 0.0)) throw DomainError("sphere_kernel_average: requires rho >= 0");
    if (rho == 0.0) return std::pow(r, -lambda);

    // N_n = |S^{n-2}| / |S^{n-1}| turns the theta-integral into a mean.
    const double nn = std::exp(lgamma_fn(0.5 * n) - lgamma_fn(0.5 * (n - 1))) / std::sqrt(M_PI);

    if (rho == r) {
        // Distance^2 = 2 rho r (1 - c) exactly, so the average is a Beta integral.
        if (lambda >= n - 1.0)
            throw DivergenceError("sphere_kernel_average: diagonal integral diverges for lambda >= n-1");
        return nn * std::pow(2.0 * rho * r, -0.5 * lambda) *
               std::pow(2.0, n - 2.0 - 0.5 * lambda) *
               beta_fn(0.5 * (n - 1.0 - lambda), 0.5 * (n - 1.0));
    }

    const double beta_exp = 0.5 * (n - 3.0);
    const double aa = rho * rho + r * r;
    const double bb = 2.0 * rho * r;
    auto h = [&](double c) { return std::pow(aa - bb * c, -0.5 * lambda); };
    return nn * integrate_power_endpoints(h, -1.0, 1.0, beta_exp, beta_exp, cfg);
}

double integrate_radial_nd(FnRef profile, double kernel_lambda, double x_norm, int n,
                           double decay_q, const QuadConfig& cfg) {
    if (n < 1) throw DomainError("integrate_radial_nd: requires n >= 1");
    if (!(kernel_lambda < static_cast<double>(n)))
        throw DivergenceError("integrate_radial_nd: kernel exponent must satisfy lambda < n");
    if (!(decay_q + kernel_lambda > static_cast<double>(n)))
        throw DivergenceError("integrate_radial_nd: profile decay too slow for the kernel tail");
    if (!(x_norm >= 0.0)) throw DomainError("integrate_radial_nd: x_norm must be >= 0");

    const double lambda = kernel_lambda;
    const double rho = x_norm;
    const double tail_q = decay_q + lambda - (n - 1.0);
    const QuadConfig inner = cfg.tightened(0.05);

    if (n == 1) {
        // "Sphere" is the two points +-r.
        auto f = [&](double r) {
            return profile(r) * (std::pow(std::abs(rho - r), -lambda) + std::pow(rho + r, -lambda));
        };
        double total = 0.0;
        if (rho > 0.0) {
            // Around the diagonal the |rho - r|^-lambda factor is pulled out exactly.
            auto strip = [&](double r) { return profile(r); };
            auto smooth_extra = [&](double r) { return profile(r) * std::pow(rho + r, -lambda); };
            total += integrate_power_endpoints(strip, 0.5 * rho, rho, 0.0, -lambda, cfg);
            total += integrate_power_endpoints(strip, rho, 2.0 * rho, -lambda, 0.0, cfg);
            total += integrate_adaptive(smooth_extra, 0.5 * rho, 2.0 * rho, cfg);
            total += integrate_adaptive(f, 0.0, 0.5 * rho, cfg);
            const double t0 = std::max(2.0 * rho, cfg.tail_cutoff);
            if (t0 > 2.0 * rho) total += integrate_adaptive(f, 2.0 * rho, t0, cfg);
            total += integrate_tail(f, tail_q, t0, cfg);
        } else {
            auto at_zero = [&](double r) { return 2.0 * profile(r) * std::pow(r, -lambda); };
            const double t0 = cfg.tail_cutoff;
            auto stripped = [&](double r) { return 2.0 * profile(r); };
            total += integrate_power_endpoints(stripped, 0.0, t0, -lambda, 0.0, cfg);
            total += integrate_tail(at_zero, tail_q, t0, cfg);
        }
        return total;
    }

    const double omega = unit_sphere_area(n);
    auto f = [&](double r) {
        return r == 0.0 ? 0.0
                        : std::pow(r, n - 1.0) * profile(r) *
                              sphere_kernel_average(rho, r, lambda, n, inner);
    };

    double total = 0.0;
    if (rho > 0.0) {
        total += integrate_adaptive(f, 0.0, 0.5 * rho, cfg);
        total += integrate_adaptive(f, 0.5 * rho, rho, cfg);
        total += integrate_adaptive(f, rho, 2.0 * rho, cfg);
        const double t0 = std::max(2.0 * rho, cfg.tail_cutoff);
        if (t0 > 2.0 * rho) total += integrate_adaptive(f, 2.0 * rho, t0, cfg);
        total += integrate_tail(f, tail_q, t0, cfg);
    } else {
        // sphere_kernel_average degenerates to r^-lambda; use it exactly.
        const double t0 = cfg.tail_cutoff;
        auto stripped = [&](double r) { return profile(r); };
        total += integrate_power_endpoints(stripped, 0.0, t0, n - 1.0 - lambda, 0.0, cfg);
        total += integrate_tail(f, tail_q, t0, cfg);
    }
    return omega * total;
}

} // namespace nlk
