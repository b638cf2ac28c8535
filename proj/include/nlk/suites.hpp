#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nlk/params.hpp"
#include "nlk/report.hpp"

namespace nlk {

/// CLI-level options shared by every suite. Unset fields fall back to the
/// suite's flagship defaults (recorded in the report's params).
struct SuiteOptions {
    std::optional<int> n;
    std::optional<int> m;
    std::optional<double> alpha;
    std::optional<double> a;
    std::optional<double> p;
    std::optional<double> radius;
    std::optional<int> samples;
    std::optional<double> tol; ///< overrides every case tolerance when set
    std::uint64_t seed = 0;
};

std::vector<std::string> suite_names();

SuiteReport verify_constants(const SuiteOptions& opt);
SuiteReport verify_mean_value(const SuiteOptions& opt);
SuiteReport verify_green_poisson(const SuiteOptions& opt);
SuiteReport verify_riesz_semigroup(const SuiteOptions& opt);
SuiteReport verify_bubble_ie(const SuiteOptions& opt);
SuiteReport verify_superpoly(const SuiteOptions& opt);
SuiteReport verify_kelvin(const SuiteOptions& opt);
SuiteReport verify_mu(const SuiteOptions& opt);

/// Dispatch by suite name; throws DomainError on unknown names (usage error).
SuiteReport run_suite(const std::string& name, const SuiteOptions& opt);

/// Plain constants object for the `constants` subcommand (byte-stable).
std::string constants_json(const Params& params);
std::string constants_csv(const Params& params);

} // namespace nlk
