#include "nlk/special_functions.hpp"

#include <cmath>
#include <limits>

#include "nlk/geometry.hpp"
#include "nlk/quadrature.hpp"

namespace nlk {

namespace {

// Lanczos coefficients, g = 7, 9 terms.
constexpr double kLanczos[9] = {
    0.99999999999980993,   676.5203681218851,     -1259.1392167224028,
    771.32342877765313,    -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,  9.9843695780195716e-6, 1.5056327351493116e-7};

constexpr double kSqrtTwoPi = 2.5066282746310005024;

bool is_nonpositive_integer(double x) {
    return x <= 0.0 && x == std::floor(x);
}

// Lanczos core for x >= 0.5.
double gamma_positive(double x) {
    double acc = kLanczos[0];
    for (int i = 1; i < 9; ++i) acc += kLanczos[i] / (x - 1.0 + i);
    const double t = x + 6.5;
    return kSqrtTwoPi * std::pow(t, x - 0.5) * std::exp(-t) * acc;
}

double lgamma_positive(double x) {
    double acc = kLanczos[0];
    for (int i = 1; i < 9; ++i) acc += kLanczos[i] / (x - 1.0 + i);
    const double t = x + 6.5;
    return std::log(kSqrtTwoPi * acc) + (x - 0.5) * std::log(t) - t;
}

// Internal high-accuracy config for the fixed special-function integrals.
QuadConfig special_cfg() {
    QuadConfig cfg;
    cfg.abs_tol = 1e-13;
    cfg.rel_tol = 1e-13;
    cfg.max_depth = 52;
    return cfg;
}

} // namespace

double gamma_fn(double x) {
    if (is_nonpositive_integer(x)) throw DomainError("gamma_fn: pole at non-positive integer");
    if (x >= 0.5) return gamma_positive(x);
    // Reflection: Gamma(x) = pi / (sin(pi x) Gamma(1 - x)).
    return M_PI / (std::sin(M_PI * x) * gamma_positive(1.0 - x));
}

double lgamma_fn(double x) {
    if (!(x > 0.0)) throw DomainError("lgamma_fn: requires x > 0");
    if (x >= 0.5) return lgamma_positive(x);
    return std::log(M_PI / std::sin(M_PI * x)) - lgamma_positive(1.0 - x);
}

double beta_fn(double a, double b) {
    if (!(a > 0.0 && b > 0.0)) throw DomainError("beta_fn: requires a, b > 0");
    return std::exp(lgamma_fn(a) + lgamma_fn(b) - lgamma_fn(a + b));
}

double unit_sphere_area(int n) {
    if (n < 1) throw DomainError("unit_sphere_area: requires n >= 1");
    return 2.0 * std::pow(M_PI, 0.5 * n) / gamma_fn(0.5 * n);
}

double frac_lap_constant(int n, double alpha) {
    if (n < 1) throw DomainError("frac_lap_constant: requires n >= 1");
    if (!(alpha > 0.0 && alpha < 2.0)) throw DomainError("frac_lap_constant: alpha must lie in (0,2)");
    const double num = std::pow(2.0, alpha) * gamma_fn(0.5 * (n + alpha));
    const double den = std::pow(M_PI, 0.5 * n) * std::abs(gamma_fn(-0.5 * alpha));
    return num / den;
}

double riesz_constant(double gamma, int n) {
    if (!(gamma > 0.0 && gamma < static_cast<double>(n)))
        throw DomainError("riesz_constant: requires 0 < gamma < n");
    return gamma_fn(0.5 * (n - gamma)) /
           (std::pow(M_PI, 0.5 * n) * std::pow(2.0, gamma) * gamma_fn(0.5 * gamma));
}

double poisson_constant(int n, double alpha) {
    if (n < 1) throw DomainError("poisson_constant: requires n >= 1");
    if (!(alpha > 0.0 && alpha < 2.0)) throw DomainError("poisson_constant: alpha must lie in (0,2)");
    return gamma_fn(0.5 * n) * std::sin(0.5 * M_PI * alpha) / std::pow(M_PI, 0.5 * n + 1.0);
}

double mean_value_constant(double alpha) {
    if (!(alpha > 0.0 && alpha < 2.0)) throw DomainError("mean_value_constant: alpha must lie in (0,2)");
    return 2.0 * std::sin(0.5 * M_PI * alpha) / M_PI;
}

double i_const(double s, int n) {
    if (!(s > 0.0 && 2.0 * s < static_cast<double>(n)))
        throw DomainError("i_const: requires 0 < s < n/2");
    return std::pow(M_PI, 0.5 * n) * gamma_fn(0.5 * (n - 2.0 * s)) / gamma_fn(n - s);
}

double green_constant(int n, double alpha) {
    if (n < 1) throw DomainError("green_constant: requires n >= 1");
    if (!(alpha > 0.0 && alpha < 2.0)) throw DomainError("green_constant: alpha must lie in (0,2)");
    const double g = gamma_fn(0.5 * alpha);
    return gamma_fn(0.5 * n) / (std::pow(2.0, alpha) * std::pow(M_PI, 0.5 * n) * g * g);
}

double incomplete_kernel_integral(double T, double alpha, int n) {
    if (!(T >= 0.0)) throw DomainError("incomplete_kernel_integral: requires T >= 0");
    if (!(alpha > 0.0 && alpha < 2.0))
        throw DomainError("incomplete_kernel_integral: alpha must lie in (0,2)");
    if (n < 1) throw DomainError("incomplete_kernel_integral: requires n >= 1");
    if (T == 0.0) return 0.0;

    const double a = 0.5 * alpha;       // lower Beta exponent, in (0,1)
    const double b = 0.5 * (n - alpha); // upper Beta exponent, may be <= 0
    const QuadConfig cfg = special_cfg();

    if (std::isinf(T)) {
        if (!(b > 0.0))
            throw DivergenceError("incomplete_kernel_integral: integral over (0,inf) diverges for n <= alpha");
        return beta_fn(a, b);
    }

    // t = b/(1+b) maps the integral onto int_0^X t^{a-1} (1-t)^{b-1} dt.
    const double x_up = T / (1.0 + T);
    const double x_mid = std::min(x_up, 0.5);

    auto upper_factor = [&](double t) { return std::pow(1.0 - t, b - 1.0); };
    double value = integrate_power_endpoints(upper_factor, 0.0, x_mid, a - 1.0, 0.0, cfg);

    if (x_up > 0.5) {
        // Remaining piece int_{1-X}^{1/2} s^{b-1} (1-s)^{a-1} ds in s = 1-t,
        // with the s^{b-1} steepness absorbed by w = s^b (w = log s for b = 0).
        const double s0 = 1.0 - x_up;
        if (b != 0.0) {
            const double w_lo = std::pow(s0, b);
            const double w_hi = std::pow(0.5, b);
            auto h = [&](double w) { return std::pow(1.0 - std::pow(w, 1.0 / b), a - 1.0); };
            const double lo = std::min(w_lo, w_hi);
            const double hi = std::max(w_lo, w_hi);
            double piece = integrate_adaptive(h, lo, hi, cfg) / b;
            if (w_lo > w_hi) piece = -piece;
            value += piece;
        } else {
            auto h = [&](double w) { return std::pow(1.0 - std::exp(w), a - 1.0); };
            value += integrate_adaptive(h, std::log(s0), std::log(0.5), cfg);
        }
    }
    return value;
}

double critical_exponent(const Params& params) {
    params.validate();
    if (!params.subcritical_geometry())
        throw DomainError("critical_exponent: undefined unless 2m + alpha < n");
    return (params.n + 2.0 * params.m + params.alpha + 2.0 * params.a) /
           (params.n - 2.0 * params.m - params.alpha);
}

} // namespace nlk
