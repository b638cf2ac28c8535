#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "nlk/params.hpp"

namespace nlk {

/// Pass policy of a verification case. The policy is also spelled out in the
/// case description so reports are self-describing.
enum class TolPolicy { AbsOrRel, Abs, Rel };

struct CaseResult {
    std::string id;
    std::string description;
    double computed = 0.0;
    double expected = 0.0;
    double abs_err = 0.0;
    double rel_err = 0.0;
    double tol = 0.0;
    bool pass = false;
};

/// Build a CaseResult from computed/expected under the given policy.
CaseResult make_case(std::string id, std::string description, double computed, double expected,
                     double tol, TolPolicy policy);

/// A case that records an expected precondition failure: pass iff the error
/// fired (computed = 1 when it did, 0 otherwise; expected = 1).
CaseResult make_expected_error_case(std::string id, std::string description, bool error_fired);

struct SuiteReport {
    std::string suite;
    Params params;
    std::uint64_t seed = 0;
    std::vector<CaseResult> cases;
    bool pass = false;
    std::int64_t wall_time_ms = 0;

    /// Sort cases lexicographically by id and recompute the aggregate flag.
    void finalize();
};

/// Byte-stable JSON: fixed key order, reals as %.16e (17 significant digits).
/// wall_time_ms is serialized as 0 so identical invocations produce identical
/// bytes; measured timing is reported on stderr by the CLI instead.
std::string report_to_json(const SuiteReport& report);

/// CSV rows: suite,case_id,computed,expected,abs_err,rel_err,tol,pass.
std::string report_to_csv(const SuiteReport& report);

/// Serialize in the requested format ("json" or "csv") and write to path.
void write_report_file(const SuiteReport& report, const std::string& path,
                       const std::string& format);

/// %.16e formatting used across all report serialization.
std::string format_real(double v);

} // namespace nlk
