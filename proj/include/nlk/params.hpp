#pragma once

#include "nlk/errors.hpp"

namespace nlk {

/// Problem parameters (n, m, alpha, a, p) with the derived quantities
/// gamma = 2m + alpha and tau used throughout the kernels.
struct Params {
    int n = 5;          ///< dimension, >= 1
    int m = 1;          ///< integer order, >= 0
    double alpha = 1.0; ///< fractional order in (0, 2)
    double a = 0.0;     ///< Hardy-Henon weight exponent, >= 0
    double p = 4.0;     ///< nonlinearity exponent, > 0

    Params() = default;
    Params(int n_, int m_, double alpha_, double a_ = 0.0, double p_ = 1.0)
        : n(n_), m(m_), alpha(alpha_), a(a_), p(p_) {
        validate();
    }

    void validate() const {
        if (n < 1) throw DomainError("Params: n must be >= 1");
        if (m < 0) throw DomainError("Params: m must be >= 0");
        if (!(alpha > 0.0 && alpha < 2.0)) throw DomainError("Params: alpha must lie in (0,2)");
        if (!(a >= 0.0)) throw DomainError("Params: a must be >= 0");
        if (!(p > 0.0)) throw DomainError("Params: p must be > 0");
    }

    /// Total operator order gamma = 2m + alpha (> 0 whenever valid).
    double gamma() const { return 2.0 * m + alpha; }

    /// True when the configuration is in the subcritical-order regime
    /// gamma < n, where the critical exponent and the bubble exist.
    bool subcritical_geometry() const { return gamma() < static_cast<double>(n); }

    /// tau = n + 2m + alpha + 2a - p(n - 2m - alpha).
    double tau() const { return n + 2.0 * m + alpha + 2.0 * a - p * (n - 2.0 * m - alpha); }
};

} // namespace nlk
