#pragma once

#include <stdexcept>
#include <string>

namespace nlk {

/// Precondition violation (bad parameter ranges, points outside domains, ...).
class DomainError : public std::domain_error {
public:
    explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

/// An integral that provably diverges under the declared decay/exponents.
class DivergenceError : public std::domain_error {
public:
    explicit DivergenceError(const std::string& what) : std::domain_error(what) {}
};

/// Adaptive quadrature ran out of depth/panels before reaching the tolerance.
/// Carries the best estimate and a bound on its error.
class QuadratureError : public std::runtime_error {
public:
    QuadratureError(const std::string& what, double best, double bound)
        : std::runtime_error(what), best_estimate(best), error_bound(bound) {}
    double best_estimate;
    double error_bound;
};

/// Declared field metadata contradicted by sampled values.
class FieldContractError : public std::runtime_error {
public:
    explicit FieldContractError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace nlk
