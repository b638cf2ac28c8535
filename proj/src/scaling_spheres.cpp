#include "nlk/scaling_spheres.hpp"

#include <cmath>
#include <limits>

#include "nlk/special_functions.hpp"

namespace nlk {

Rational RationalParams::critical_exponent() const {
    if (!subcritical_geometry())
        throw DomainError("RationalParams: critical exponent undefined unless 2m + alpha < n");
    return (Rational(n) + Rational(2 * m) + alpha + Rational(2) * a) /
           (Rational(n) - Rational(2 * m) - alpha);
}

std::string regime_name(Regime r) {
    switch (r) {
        case Regime::Subcritical: return "Subcritical";
        case Regime::Critical: return "Critical";
        case Regime::Supercritical: return "Supercritical";
        case Regime::CriticalOrder: return "CriticalOrder";
        case Regime::SupercriticalOrder: return "SupercriticalOrder";
    }
    return "Unknown";
}

namespace {

void require_subcritical_p(const Params& params) {
    if (!params.subcritical_geometry())
        throw DomainError("mu recurrence: requires the subcritical-order geometry 2m + alpha < n");
    const double pc = critical_exponent(params);
    if (!(params.p > 0.0 && params.p < pc))
        throw DomainError("mu recurrence: monotone regime needs 0 < p < p_c(a)");
}

} // namespace

MuState mu_sequence(const Params& params, int k_max, std::optional<double> mu0) {
    params.validate();
    require_subcritical_p(params);
    if (k_max < 0) throw DomainError("mu_sequence: k_max must be >= 0");

    MuState state;
    state.params = params;
    state.mu0 = mu0.value_or(0.5 * (params.n - params.gamma()));
    state.sequence.reserve(static_cast<std::size_t>(k_max) + 1);
    const double shift = params.a + params.gamma();
    double mu = state.mu0;
    state.sequence.push_back(mu);
    for (int k = 0; k < k_max; ++k) {
        mu = params.p * mu - shift;
        state.sequence.push_back(mu);
    }
    return state;
}

double mu_limit(const Params& params) {
    params.validate();
    require_subcritical_p(params);
    if (params.p < 1.0) return -(params.a + params.gamma()) / (1.0 - params.p);
    return -std::numeric_limits<double>::infinity();
}

std::vector<Rational> mu_sequence_exact(const RationalParams& params, int k_max,
                                        const Rational& mu0) {
    if (!params.subcritical_geometry())
        throw DomainError("mu_sequence_exact: requires 2m + alpha < n");
    if (!(params.p > Rational(0) && params.p < params.critical_exponent()))
        throw DomainError("mu_sequence_exact: requires 0 < p < p_c(a)");
    std::vector<Rational> seq;
    seq.reserve(static_cast<std::size_t>(k_max) + 1);
    const Rational shift = params.a + params.gamma();
    Rational mu = mu0;
    seq.push_back(mu);
    for (int k = 0; k < k_max; ++k) {
        mu = params.p * mu - shift;
        seq.push_back(mu);
    }
    return seq;
}

Rational mu0_default_exact(const RationalParams& params) {
    return (Rational(params.n) - params.gamma()) / Rational(2);
}

Rational mu_limit_exact(const RationalParams& params) {
    if (!(params.p > Rational(0) && params.p < Rational(1)))
        throw DomainError("mu_limit_exact: finite limit exists only for 0 < p < 1");
    return -(params.a + params.gamma()) / (Rational(1) - params.p);
}

Regime classify_regime(const Params& params) {
    params.validate();
    const double gamma = params.gamma();
    const double n = static_cast<double>(params.n);
    if (gamma > n) return Regime::SupercriticalOrder;
    if (gamma == n) return Regime::CriticalOrder;
    const double pc = critical_exponent(params);
    if (params.p < pc) return Regime::Subcritical;
    if (params.p == pc) return Regime::Critical;
    return Regime::Supercritical;
}

Regime classify_regime_exact(const RationalParams& params) {
    const Rational gamma = params.gamma();
    const Rational n(params.n);
    if (gamma > n) return Regime::SupercriticalOrder;
    if (gamma == n) return Regime::CriticalOrder;
    const Rational pc = params.critical_exponent();
    if (params.p < pc) return Regime::Subcritical;
    if (params.p == pc) return Regime::Critical;
    return Regime::Supercritical;
}

} // namespace nlk
