#pragma once

#include "nlk/fields.hpp"
#include "nlk/geometry.hpp"
#include "nlk/params.hpp"

namespace nlk {

/// The classified conformal solution family: u(x) = mu^{(n-2m-alpha)/2} Q(mu (x - x0))
/// with Q(x) = c* (1 + |x|^2)^{-(n-2m-alpha)/2} and
/// c* = (R_{2m+alpha,n} I((n-2m-alpha)/2))^{-(n-2m-alpha)/(2(2m+alpha))}.
struct Bubble {
    Params params;
    double mu = 1.0;
    Vec x0;

    Bubble(Params params_, double mu_, Vec x0_);

    /// c*, finite and positive in the subcritical-order regime.
    double prefactor() const;
};

/// Closed-form evaluation of the bubble; strictly positive and radially
/// decreasing about x0.
double bubble_value(const Bubble& bubble, const Vec& x);

/// The bubble as a radial ScalarField (decay exponent n - 2m - alpha).
ScalarField bubble_field(const Bubble& bubble);

/// The conformal nonlinearity Q^{p_c} as a radial field (decay n + 2m + alpha).
ScalarField bubble_rhs_field(const Bubble& bubble);

/// Kelvin transform centered at 0: u_lambda(x) = (lambda/|x|)^{n-2m-alpha} u(lambda^2 x / |x|^2).
/// The conformal weight is tied to the Params geometry.
double kelvin_transform(const ScalarField& u, const Params& params, double lambda, const Vec& x);

/// omega^lambda(x) = u_lambda(x) - u(x) on the punctured ball 0 < |x| < lambda.
double kelvin_deficit(const ScalarField& u, const Params& params, double lambda, const Vec& x);

/// The transform as a field on R^n \ {0}.
ScalarField kelvin_field(const ScalarField& u, const Params& params, double lambda);

} // namespace nlk
