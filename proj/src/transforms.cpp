#include "nlk/transforms.hpp"

#include <cmath>

#include "nlk/special_functions.hpp"

namespace nlk {

Bubble::Bubble(Params params_, double mu_, Vec x0_)
    : params(params_), mu(mu_), x0(std::move(x0_)) {
    params.validate();
    if (!params.subcritical_geometry())
        throw DomainError("Bubble: requires the subcritical-order geometry 2m + alpha < n");
    if (!(mu > 0.0)) throw DomainError("Bubble: mu must be positive");
    if (x0.size() != params.n) throw DomainError("Bubble: center dimension mismatch");
}

double Bubble::prefactor() const {
    const double gamma = params.gamma();
    const double gap = params.n - gamma; // n - 2m - alpha > 0
    const double base = riesz_constant(gamma, params.n) * i_const(0.5 * gap, params.n);
    return std::pow(base, -gap / (2.0 * gamma));
}

double bubble_value(const Bubble& bubble, const Vec& x) {
    if (x.size() != bubble.params.n) throw DomainError("bubble_value: dimension mismatch");
    const double s = 0.5 * (bubble.params.n - bubble.params.gamma());
    const double r = bubble.mu * distance(x, bubble.x0);
    return std::pow(bubble.mu, s) * bubble.prefactor() * std::pow(1.0 + r * r, -s);
}

ScalarField bubble_field(const Bubble& bubble) {
    const double s = 0.5 * (bubble.params.n - bubble.params.gamma());
    const double c = bubble.prefactor();
    const double mu = bubble.mu;
    const double amp = std::pow(mu, s) * c;
    auto prof = [amp, mu, s](double r) { return amp * std::pow(1.0 + mu * mu * r * r, -s); };
    // Q decays like r^{-(n - 2m - alpha)} = r^{-2s}.
    return radial_field(bubble.params.n, bubble.x0, prof, 2.0 * s, 0.5 / mu);
}

ScalarField bubble_rhs_field(const Bubble& bubble) {
    const Params& pr = bubble.params;
    const double pc = critical_exponent(pr);
    const double s = 0.5 * (pr.n - pr.gamma());
    const double c = bubble.prefactor();
    const double mu = bubble.mu;
    const double amp = std::pow(std::pow(mu, s) * c, pc);
    auto prof = [amp, mu, s, pc](double r) {
        return amp * std::pow(1.0 + mu * mu * r * r, -s * pc);
    };
    // Q^{p_c} decays like r^{-(n + 2m + alpha)}.
    return radial_field(pr.n, bubble.x0, prof, pr.n + pr.gamma(), 0.5 / mu);
}

double kelvin_transform(const ScalarField& u, const Params& params, double lambda, const Vec& x) {
    if (!(lambda > 0.0)) throw DomainError("kelvin_transform: lambda must be positive");
    if (x.size() != u.dim || u.dim != params.n)
        throw DomainError("kelvin_transform: dimension mismatch");
    const double nx = x.norm();
    if (nx == 0.0) throw DomainError("kelvin_transform: singular at x = 0");
    const double weight = std::pow(lambda / nx, params.n - params.gamma());
    const Vec inverted = (lambda * lambda / (nx * nx)) * x;
    return weight * u.eval(inverted);
}

double kelvin_deficit(const ScalarField& u, const Params& params, double lambda, const Vec& x) {
    const double nx = x.norm();
    if (!(nx > 0.0 && nx < lambda))
        throw DomainError("kelvin_deficit: x must lie in the punctured ball B_lambda \\ {0}");
    return kelvin_transform(u, params, lambda, x) - u.eval(x);
}

ScalarField kelvin_field(const ScalarField& u, const Params& params, double lambda) {
    ScalarField v;
    v.dim = u.dim;
    v.decay_exponent = 0.0; // bounded only away from 0; callers manage the origin
    v.smoothness_radius = u.smoothness_radius;
    v.eval = [u, params, lambda](const Vec& x) { return kelvin_transform(u, params, lambda, x); };
    return v;
}

} // namespace nlk
