#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <vector>

#include "nlk/geometry.hpp"
#include "nlk/quadrature.hpp"

namespace nlk {

/// An evaluable function on R^n with the decay/smoothness metadata the
/// nonlocal operators need. Fields must be pure: evaluation has no side
/// effects and is safe to call concurrently.
struct ScalarField {
    int dim = 1;
    std::function<double(const Vec&)> eval;

    /// Declared decay: |u(x)| <= C (1 + |x|)^{-decay_exponent}.
    double decay_exponent = 0.0;

    /// Radius within which second differences are Taylor-controlled; the
    /// fractional Laplacian integrates its near zone analytically inside it.
    double smoothness_radius = 1.0;

    /// Radial structure, when present: eval(x) == profile(|x - radial_center|).
    bool radial = false;
    Vec radial_center{};
    std::function<double(double)> profile;

    /// Radii where a radial profile is merely continuous (quadrature splits there).
    std::vector<double> profile_breaks{};

    double operator()(const Vec& x) const { return eval(x); }
};

/// u == c everywhere.
ScalarField constant_field(int n, double c);

/// u(x) = cos(k . x + phase).
ScalarField cosine_field(const Vec& k, double phase = 0.0);

/// Radial Gaussian exp(-|x - center|^2 / width^2).
ScalarField gaussian_field(const Vec& center, double width = 1.0);

/// Compactly supported radial bump (1 - |x|^2)^3 on the unit ball, 0 outside.
ScalarField bump_field(int n);

/// Indicator of the ball (radial, profile 1 inside / 0 outside).
ScalarField ball_indicator_field(int n, double radius);

/// Wrap an arbitrary radial profile about `center`.
ScalarField radial_field(int n, Vec center, std::function<double(double)> profile,
                         double decay_exponent, double smoothness_radius = 1.0);

/// Natural cubic spline through (x_i, y_i); x strictly increasing.
class CubicSpline {
public:
    CubicSpline() = default;
    CubicSpline(std::vector<double> x, std::vector<double> y);
    double operator()(double x) const;
    double x_min() const { return x_.front(); }
    double x_max() const { return x_.back(); }

private:
    std::vector<double> x_, y_, m_; // m_ = second derivatives
};

/// Radial field backed by a dense table + cubic spline, for expensive radial
/// profiles (Riesz potentials, Poisson extensions) that sit inside an outer
/// adaptive pass. Beyond the table the declared power tail
/// y(r) ~ y(r_max) (r/r_max)^{-tail_exponent} is used.
ScalarField tabulated_radial_field(int n, const Vec& center,
                                   const std::function<double(double)>& profile,
                                   double r_max, int samples, double tail_exponent,
                                   std::vector<double> breaks = {});

/// L_alpha membership is decidable from the declared decay: any bounded field
/// with decay_exponent >= 0 integrates against (1 + |x|^{n+alpha})^{-1}.
bool in_l_alpha(const ScalarField& u, double alpha);

/// Spot-check the declared decay exponent by sampling |u| along fixed rays at
/// dyadic radii. Throws FieldContractError on gross violation.
void validate_decay(const ScalarField& u, double r_max = 64.0);

/// Deterministic low-discrepancy point set on S^{n-1} (Halton sequence mapped
/// through the inverse normal CDF and normalized). `seed` applies a
/// Cranley-Patterson shift; seed 0 is the default set.
std::vector<Vec> sphere_point_set(int n, int count, std::uint64_t seed);

} // namespace nlk
