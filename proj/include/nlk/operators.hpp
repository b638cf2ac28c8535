#pragma once

#include <vector>

#include "nlk/fields.hpp"
#include "nlk/geometry.hpp"
#include "nlk/parallel.hpp"
#include "nlk/quadrature.hpp"

namespace nlk {

/// Mean of u over the sphere of radius r about `center`. Radial fields reduce
/// to a single profile evaluation (same center) or a weighted 1-D integral
/// (offset center); general fields use angular quadrature for n <= 3 and the
/// deterministic low-discrepancy point set (cfg.sphere_samples, `seed`) above.
double spherical_average(const ScalarField& u, const Vec& center, double r,
                         const QuadConfig& cfg, std::uint64_t seed = 0);

/// Pointwise fractional Laplacian (-Delta)^{alpha/2} u(x) under the
/// Fourier-symbol normalization, computed from the symmetric second
/// difference: c(n,alpha) |S^{n-1}| int_0^inf (u(x) - mean_{|h|=r} u(x+h)) r^{-1-alpha} dr.
/// The near zone r < delta uses a two-term Taylor fit of the sphere-mean
/// defect, the far zone the declared-decay tail map.
double frac_laplacian(const ScalarField& u, const Vec& x, double alpha, const QuadConfig& cfg);

/// Riesz potential I_gamma f(x) = int R_{gamma,n} |x-y|^{gamma-n} f(y) dy for
/// radial f, 0 < gamma < n, via the radial reduction.
double riesz_potential(const ScalarField& f, double gamma, const Vec& x, const QuadConfig& cfg);

/// Ring average K(alpha) int_R^inf R^alpha / (r (r^2 - R^2)^{alpha/2}) ubar(r) dr,
/// the nonlocal analogue of the spherical mean. Equals u(center) exactly when
/// u is alpha-harmonic in a neighborhood of the closed ball.
double ring_average(const ScalarField& u, const Vec& center, double R, double alpha,
                    const QuadConfig& cfg);

/// Green function of (-Delta)^{alpha/2} on the ball; 0 when either argument
/// leaves the open ball, +infinity at coincident interior points.
double green_function_alpha(const Vec& x, const Vec& y, const Ball& ball, double alpha);

/// Poisson kernel of (-Delta)^{alpha/2} on the ball for interior x and
/// exterior y; 0 for |y - center| < R; throws on the boundary sphere.
double poisson_kernel_alpha(const Vec& x, const Vec& y, const Ball& ball, double alpha);

/// Classical Green function of -Delta on a ball centered at the origin, n >= 3.
double green_function_laplacian(const Vec& x, const Vec& y, const Ball& ball);

/// Poisson integral int_{|y-c|>R} P^alpha_R(x,y) g(y) dy for interior x: the
/// alpha-harmonic extension of the exterior datum g.
double poisson_extension(const ScalarField& g, const Ball& ball, double alpha, const Vec& x,
                         const QuadConfig& cfg);

/// Green-Poisson representation: int_B G(x,y) v0(y) dy + int_{out} P(x,y) u(y) dy
/// with caller-certified v0 = (-Delta)^{alpha/2} u. Reproduces u(x) for any
/// radius; the radius-independence is what the verification suite checks.
double green_poisson_reconstruct(const ScalarField& u, const ScalarField& v0, const Ball& ball,
                                 double alpha, const Vec& x, const QuadConfig& cfg);

/// Radial Laplacian -(v'' + (n-1) v'/r) of a radial profile by central
/// differences with one Richardson level; h is halved for the extrapolation.
double neg_radial_laplacian_fd(const std::function<double(double)>& v, double r, int n, double h);

/// Batch lanes over independent points. Exec::Serial is the reference
/// implementation; Exec::Auto runs the same per-point kernels under OpenMP.
/// Both produce bit-identical output.
std::vector<double> frac_laplacian_batch(const ScalarField& u, const std::vector<Vec>& pts,
                                         double alpha, const QuadConfig& cfg,
                                         parallel::Exec exec = parallel::Exec::Auto);
std::vector<double> riesz_potential_batch(const ScalarField& f, double gamma,
                                          const std::vector<Vec>& pts, const QuadConfig& cfg,
                                          parallel::Exec exec = parallel::Exec::Auto);

} // namespace nlk
