#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "nlk/parallel.hpp"
#include "nlk/report.hpp"
#include "nlk/suites.hpp"

namespace {

struct CommonFlags {
    nlk::SuiteOptions opt;
    std::string out_path;
    std::string format = "json";
};

void add_common_flags(CLI::App* cmd, CommonFlags& flags) {
    cmd->add_option_function<int>("--n", [&flags](const int& v) { flags.opt.n = v; }, "dimension");
    cmd->add_option_function<int>("--m", [&flags](const int& v) { flags.opt.m = v; }, "integer order");
    cmd->add_option_function<double>("--alpha", [&flags](const double& v) { flags.opt.alpha = v; },
                                     "fractional order in (0,2)");
    cmd->add_option_function<double>("--a", [&flags](const double& v) { flags.opt.a = v; },
                                     "weight exponent");
    cmd->add_option_function<double>("--p", [&flags](const double& v) { flags.opt.p = v; },
                                     "nonlinearity exponent");
    cmd->add_option_function<double>("--radius", [&flags](const double& v) { flags.opt.radius = v; },
                                     "ball radius");
    cmd->add_option_function<int>("--samples", [&flags](const int& v) { flags.opt.samples = v; },
                                  "sample count (table nodes; recurrence length for mu)");
    cmd->add_option_function<double>("--tol", [&flags](const double& v) { flags.opt.tol = v; },
                                     "override per-case tolerance");
    cmd->add_option("--seed", flags.opt.seed,
                    "seed for low-discrepancy/sampling offsets (0 = default)");
    cmd->add_option("--out", flags.out_path, "write the report to this path");
    cmd->add_option("--format", flags.format, "json|csv")->check(CLI::IsMember({"json", "csv"}));
}

int emit_report(const nlk::SuiteReport& report, const CommonFlags& flags) {
    const std::string payload =
        flags.format == "json" ? nlk::report_to_json(report) : nlk::report_to_csv(report);
    std::cout << payload;
    if (!flags.out_path.empty()) nlk::write_report_file(report, flags.out_path, flags.format);
    std::cerr << "suite " << report.suite << ": " << (report.pass ? "pass" : "FAIL") << " ("
              << report.cases.size() << " cases, " << report.wall_time_ms << " ms)\n";
    return report.pass ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    if (const char* env = std::getenv("NLK_THREADS"))
        nlk::parallel::set_max_threads(std::atoi(env));

    CLI::App app{"nonlocal-kit: fractional-Laplacian kernels and verification suites"};
    app.require_subcommand(1);

    CommonFlags const_flags;
    CLI::App* cmd_constants =
        app.add_subcommand("constants", "print the kernel constants for the given parameters");
    add_common_flags(cmd_constants, const_flags);

    CommonFlags verify_flags;
    std::string suite_name;
    CLI::App* cmd_verify = app.add_subcommand("verify", "run a named verification suite");
    cmd_verify
        ->add_option("suite", suite_name,
                     "one of: constants, mean-value, green-poisson, riesz-semigroup, bubble-ie, "
                     "superpoly, kelvin, mu")
        ->required();
    add_common_flags(cmd_verify, verify_flags);

    CommonFlags mu_flags;
    CLI::App* cmd_mu = app.add_subcommand("mu", "run the exponent-recurrence suite");
    add_common_flags(cmd_mu, mu_flags);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e); // --help / --version
        app.exit(e);
        return 2;
    }

    try {
        if (cmd_constants->parsed()) {
            nlk::Params params(const_flags.opt.n.value_or(5), const_flags.opt.m.value_or(1),
                               const_flags.opt.alpha.value_or(1.0), const_flags.opt.a.value_or(0.0),
                               const_flags.opt.p.value_or(4.0));
            const std::string payload = const_flags.format == "json"
                                            ? nlk::constants_json(params)
                                            : nlk::constants_csv(params);
            std::cout << payload;
            if (!const_flags.out_path.empty()) {
                std::ofstream out(const_flags.out_path, std::ios::binary);
                if (!out) throw std::runtime_error("cannot open '" + const_flags.out_path + "'");
                out << payload;
            }
            return 0;
        }
        if (cmd_verify->parsed()) {
            const nlk::SuiteReport report = nlk::run_suite(suite_name, verify_flags.opt);
            return emit_report(report, verify_flags);
        }
        if (cmd_mu->parsed()) {
            const nlk::SuiteReport report = nlk::run_suite("mu", mu_flags.opt);
            return emit_report(report, mu_flags);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
