#pragma once

#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/rational.hpp>

#include "nlk/params.hpp"

namespace nlk {

/// Exact arithmetic lane: the recurrence, its fixed point and the regime
/// boundaries are pure algebra and are verified without rounding when the
/// inputs are rational.
using Rational = boost::rational<boost::multiprecision::cpp_int>;

struct RationalParams {
    int n = 5;
    int m = 1;
    Rational alpha{1};
    Rational a{0};
    Rational p{1};

    Rational gamma() const { return Rational(2 * m) + alpha; }
    Rational tau() const {
        return Rational(n) + Rational(2 * m) + alpha + Rational(2) * a -
               p * (Rational(n) - Rational(2 * m) - alpha);
    }
    bool subcritical_geometry() const { return gamma() < Rational(n); }
    Rational critical_exponent() const; // requires gamma < n
};

enum class Regime { Subcritical, Critical, Supercritical, CriticalOrder, SupercriticalOrder };

std::string regime_name(Regime r);

/// The exponent sequence mu_{k+1} = p mu_k - (a + 2m + alpha).
struct MuState {
    Params params;
    double mu0 = 0.0;
    std::vector<double> sequence; // mu_0 .. mu_{k_max}
};

/// Floating-point recurrence; mu0 defaults to (n - 2m - alpha)/2. Requires
/// the subcritical geometry and 0 < p < p_c(a).
MuState mu_sequence(const Params& params, int k_max, std::optional<double> mu0 = std::nullopt);

/// Limit of the sequence: -(a + 2m + alpha)/(1 - p) for 0 < p < 1, and
/// -infinity for 1 <= p < p_c(a).
double mu_limit(const Params& params);

/// Exact recurrence for rational inputs.
std::vector<Rational> mu_sequence_exact(const RationalParams& params, int k_max,
                                        const Rational& mu0);
Rational mu0_default_exact(const RationalParams& params);
Rational mu_limit_exact(const RationalParams& params); // requires 0 < p < 1

/// Order regime from gamma vs n, then p vs p_c(a); both tie cases map to the
/// corresponding critical bucket.
Regime classify_regime(const Params& params);
Regime classify_regime_exact(const RationalParams& params);

} // namespace nlk
