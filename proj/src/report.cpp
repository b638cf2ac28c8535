#include "nlk/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>

#include "nlk/errors.hpp"

namespace nlk {

std::string format_real(double v) {
    if (!std::isfinite(v)) return "null"; // JSON has no inf/nan literals
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.16e", v);
    return buf;
}

namespace {

std::string json_escape(const std::string& s) {
    std::string out;
    out.reserve(s.size() + 8);
    for (char c : s) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\t': out += "\\t"; break;
            default:
                if (static_cast<unsigned char>(c) < 0x20) {
                    char buf[8];
                    std::snprintf(buf, sizeof(buf), "\\u%04x", c);
                    out += buf;
                } else {
                    out += c;
                }
        }
    }
    return out;
}

const char* bool_str(bool b) { return b ? "true" : "false"; }

} // namespace

CaseResult make_case(std::string id, std::string description, double computed, double expected,
                     double tol, TolPolicy policy) {
    CaseResult c;
    c.id = std::move(id);
    c.description = std::move(description);
    c.computed = computed;
    c.expected = expected;
    c.tol = tol;
    c.abs_err = std::abs(computed - expected);
    const double scale = std::abs(expected);
    c.rel_err = scale > 0.0 ? c.abs_err / scale : (c.abs_err == 0.0 ? 0.0 : INFINITY);
    switch (policy) {
        case TolPolicy::AbsOrRel: c.pass = c.abs_err <= tol || c.rel_err <= tol; break;
        case TolPolicy::Abs: c.pass = c.abs_err <= tol; break;
        case TolPolicy::Rel: c.pass = c.rel_err <= tol; break;
    }
    if (!std::isfinite(computed)) c.pass = false;
    return c;
}

CaseResult make_expected_error_case(std::string id, std::string description, bool error_fired) {
    return make_case(std::move(id), std::move(description), error_fired ? 1.0 : 0.0, 1.0, 0.0,
                     TolPolicy::Abs);
}

void SuiteReport::finalize() {
    std::sort(cases.begin(), cases.end(),
              [](const CaseResult& a, const CaseResult& b) { return a.id < b.id; });
    pass = !cases.empty();
    for (const CaseResult& c : cases) pass = pass && c.pass;
}

std::string report_to_json(const SuiteReport& report) {
    std::string out;
    out.reserve(512 + 256 * report.cases.size());
    out += "{\n";
    out += "  \"suite\": \"" + json_escape(report.suite) + "\",\n";
    out += "  \"params\": {\"n\": " + std::to_string(report.params.n) +
           ", \"m\": " + std::to_string(report.params.m) +
           ", \"alpha\": " + format_real(report.params.alpha) +
           ", \"a\": " + format_real(report.params.a) +
           ", \"p\": " + format_real(report.params.p) + "},\n";
    out += "  \"seed\": " + std::to_string(report.seed) + ",\n";
    out += "  \"pass\": " + std::string(bool_str(report.pass)) + ",\n";
    out += "  \"wall_time_ms\": 0,\n";
    out += "  \"cases\": [\n";
    for (std::size_t i = 0; i < report.cases.size(); ++i) {
        const CaseResult& c = report.cases[i];
        out += "    {\"id\": \"" + json_escape(c.id) + "\", \"description\": \"" +
               json_escape(c.description) + "\", \"computed\": " + format_real(c.computed) +
               ", \"expected\": " + format_real(c.expected) +
               ", \"abs_err\": " + format_real(c.abs_err) +
               ", \"rel_err\": " + format_real(c.rel_err) + ", \"tol\": " + format_real(c.tol) +
               ", \"pass\": " + bool_str(c.pass) + "}";
        out += i + 1 < report.cases.size() ? ",\n" : "\n";
    }
    out += "  ]\n";
    out += "}\n";
    return out;
}

std::string report_to_csv(const SuiteReport& report) {
    std::string out = "suite,case_id,computed,expected,abs_err,rel_err,tol,pass\n";
    for (const CaseResult& c : report.cases) {
        out += report.suite + "," + c.id + "," + format_real(c.computed) + "," +
               format_real(c.expected) + "," + format_real(c.abs_err) + "," +
               format_real(c.rel_err) + "," + format_real(c.tol) + "," + bool_str(c.pass) + "\n";
    }
    return out;
}

void write_report_file(const SuiteReport& report, const std::string& path,
                       const std::string& format) {
    std::string payload;
    if (format == "json") {
        payload = report_to_json(report);
    } else if (format == "csv") {
        payload = report_to_csv(report);
    } else {
        throw DomainError("write_report_file: unknown format '" + format + "'");
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("write_report_file: cannot open '" + path + "'");
    out << payload;
    if (!out) throw std::runtime_error("write_report_file: write failed for '" + path + "'");
}

} // namespace nlk
