#pragma once

#include "nlk/params.hpp"

namespace nlk {

/// Gamma function via a Lanczos approximation (g = 7, 9 terms) with the
/// reflection formula for x < 0.5. At least 12 significant digits on (0, 50].
/// Throws DomainError at the poles (non-positive integers).
double gamma_fn(double x);

/// log Gamma(x) for x > 0.
double lgamma_fn(double x);

/// Euler Beta B(a, b) = Gamma(a) Gamma(b) / Gamma(a+b), a, b > 0.
double beta_fn(double a, double b);

/// Surface area of S^{n-1}: 2 pi^{n/2} / Gamma(n/2).
/// (declared in geometry.hpp, defined here with the rest of the constants)

/// Normalizing constant of the pointwise fractional Laplacian under the
/// Fourier-symbol convention (symbol |xi|^alpha):
///   c(n, alpha) = 2^alpha Gamma((n+alpha)/2) / (pi^{n/2} |Gamma(-alpha/2)|).
double frac_lap_constant(int n, double alpha);

/// Riesz potential constant R_{gamma,n} = Gamma((n-gamma)/2) / (pi^{n/2} 2^gamma Gamma(gamma/2)),
/// 0 < gamma < n.
double riesz_constant(double gamma, int n);

/// Poisson kernel constant Gamma(n/2) sin(pi alpha / 2) / pi^{n/2+1}.
double poisson_constant(int n, double alpha);

/// Ring-average normalization K(alpha) = (2/pi) sin(pi alpha / 2): the unique
/// constant with K(alpha) int_R^inf R^alpha / (r (r^2-R^2)^{alpha/2}) dr = 1
/// for every R > 0, i.e. the one that makes constants reproduce themselves.
double mean_value_constant(double alpha);

/// I(s) = pi^{n/2} Gamma((n-2s)/2) / Gamma(n-s) for 0 < s < n/2.
double i_const(double s, int n);

/// Constant in front of the ball Green function of the fractional Laplacian,
/// Gamma(n/2) / (2^alpha pi^{n/2} Gamma(alpha/2)^2). This is the value forced
/// by the Green-Poisson reconstruction identity under the Fourier-symbol
/// normalization.
double green_constant(int n, double alpha);

/// int_0^T b^{alpha/2 - 1} (1+b)^{-n/2} db, evaluated through the substitution
/// t = b/(1+b) as an incomplete Beta integral; the endpoint singularity at 0
/// is absorbed analytically. T = +infinity is allowed and returns
/// B(alpha/2, (n-alpha)/2) (requires n > alpha).
double incomplete_kernel_integral(double T, double alpha, int n);

/// p_c(a) = (n + 2m + alpha + 2a) / (n - 2m - alpha); requires 2m + alpha < n.
double critical_exponent(const Params& params);

} // namespace nlk
