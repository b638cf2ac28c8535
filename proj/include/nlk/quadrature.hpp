#pragma once

#include <functional>
#include <type_traits>
#include <utility>

#include "nlk/errors.hpp"

namespace nlk {

/// Non-owning reference to a callable double -> double. The adaptive engine
/// evaluates integrands millions of times in nested contexts; this avoids
/// std::function allocation on every lambda handed down a call chain.
class FnRef {
public:
    template <class F, class = std::enable_if_t<!std::is_same_v<std::decay_t<F>, FnRef>>>
    FnRef(F&& f) // NOLINT: implicit by design
        : obj_(const_cast<void*>(static_cast<const void*>(std::addressof(f)))),
          call_([](void* o, double x) -> double { return (*static_cast<std::remove_reference_t<F>*>(o))(x); }) {}

    double operator()(double x) const { return call_(obj_, x); }

private:
    void* obj_;
    double (*call_)(void*, double);
};

/// Tolerances and zone radii for the quadrature engine and the operators
/// built on it.
struct QuadConfig {
    double abs_tol = 1e-10;
    double rel_tol = 1e-10;
    int max_depth = 50;
    double inner_split_radius = 0.0625; ///< delta: radius of the near-singularity Taylor zone
    double tail_cutoff = 16.0;          ///< M: start of the far-field transform
    int sphere_samples = 4096;          ///< deterministic sphere point count for n > 3

    void validate() const {
        if (!(abs_tol > 0.0 && abs_tol < 1.0)) throw DomainError("QuadConfig: abs_tol must lie in (0,1)");
        if (!(rel_tol > 0.0 && rel_tol < 1.0)) throw DomainError("QuadConfig: rel_tol must lie in (0,1)");
        if (max_depth < 1 || max_depth > 60) throw DomainError("QuadConfig: max_depth must lie in [1,60]");
        if (!(inner_split_radius > 0.0)) throw DomainError("QuadConfig: inner_split_radius must be > 0");
        if (!(tail_cutoff > inner_split_radius)) throw DomainError("QuadConfig: tail_cutoff must exceed inner_split_radius");
        if (sphere_samples < 1) throw DomainError("QuadConfig: sphere_samples must be >= 1");
    }

    /// Copy with tolerances scaled by `factor` (floored at 5e-15), for inner
    /// integrals that feed an outer adaptive pass.
    QuadConfig tightened(double factor) const {
        QuadConfig c = *this;
        c.abs_tol = std::max(abs_tol * factor, 5e-15);
        c.rel_tol = std::max(rel_tol * factor, 5e-15);
        return c;
    }
};

/// Adaptive Gauss-Kronrod 7-15 bisection on a finite interval. Integrable
/// endpoint singularities are resolved by the bisection itself, which grades
/// geometrically (ratio 1/2) toward the offending endpoint; the rule never
/// evaluates f at lo or hi. Deterministic: identical inputs give bit-identical
/// results. Throws QuadratureError (carrying the best estimate and an error
/// bound) when the depth/panel budget is exhausted before the tolerance.
double integrate_adaptive(FnRef f, double lo, double hi, const QuadConfig& cfg);

/// Integral of f over (lo, infinity) for f with declared decay |f| <= C r^-q,
/// q > 1, via the map r -> lo/t onto t in (0,1].
double integrate_tail(FnRef f, double decay_q, double lo, const QuadConfig& cfg);

/// Integral of (x-lo)^e_lo (hi-x)^e_hi g(x) over (lo, hi) with known endpoint
/// exponents e > -1. Each singular factor is absorbed exactly by the power
/// substitution w = (x-end)^(1+e), so the engine only ever sees smooth
/// integrands. Used wherever a kernel's endpoint exponent is known in closed
/// form (ring weights, Poisson edges, Beta-type integrals).
double integrate_power_endpoints(FnRef g, double lo, double hi, double e_lo, double e_hi,
                                 const QuadConfig& cfg);

/// Normalized spherical mean (1/|S^{n-1}|) int_{S^{n-1}} |rho e1 - r w|^-lambda dsigma(w),
/// n >= 2, computed as a weighted integral over c = cos(theta). On the diagonal
/// rho == r the integral collapses to a Beta function and is returned in closed
/// form (requires lambda < n-1 there).
double sphere_kernel_average(double rho, double r, double lambda, int n, const QuadConfig& cfg);

/// int_{R^n} |x-y|^-lambda g(|y|) dy for radial g with declared decay
/// |g| <= C r^-decay_q, reduced to omega_{n-1} int r^{n-1} g(r)
/// sphere_kernel_average(|x|, r, lambda, n) dr with diagonal splitting and a
/// tail map. Preconditions: lambda < n and decay_q + lambda > n.
double integrate_radial_nd(FnRef profile, double kernel_lambda, double x_norm, int n,
                           double decay_q, const QuadConfig& cfg);

} // namespace nlk
