#include "nlk/suites.hpp"

#include <chrono>
#include <cmath>
#include <functional>
#include <limits>
#include <map>
#include <random>

#include "nlk/operators.hpp"
#include "nlk/parallel.hpp"
#include "nlk/scaling_spheres.hpp"
#include "nlk/special_functions.hpp"
#include "nlk/transforms.hpp"

namespace nlk {

namespace {

struct CaseSpec {
    std::string id;
    std::function<CaseResult()> run;
};

SuiteReport execute(std::string suite, Params params, std::uint64_t seed,
                    std::vector<CaseSpec> specs) {
    const auto t0 = std::chrono::steady_clock::now();
    std::vector<CaseResult> results(specs.size());
    parallel::for_each_index(static_cast<std::int64_t>(specs.size()), [&](std::int64_t i) {
        const auto& spec = specs[static_cast<std::size_t>(i)];
        try {
            results[static_cast<std::size_t>(i)] = spec.run();
        } catch (const std::exception& e) {
            // Quadrature/domain failures become failed cases, not crashes.
            results[static_cast<std::size_t>(i)] = make_case(
                spec.id, std::string("failed with error: ") + e.what(),
                std::numeric_limits<double>::quiet_NaN(), 0.0, 0.0, TolPolicy::Abs);
        }
    });
    SuiteReport report;
    report.suite = std::move(suite);
    report.params = params;
    report.seed = seed;
    report.cases = std::move(results);
    report.finalize();
    report.wall_time_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                              std::chrono::steady_clock::now() - t0)
                              .count();
    return report;
}

double pick_tol(const SuiteOptions& opt, double default_tol) {
    return opt.tol.value_or(default_tol);
}

Params resolve_params(const SuiteOptions& opt, const Params& defaults) {
    Params p = defaults;
    if (opt.n) p.n = *opt.n;
    if (opt.m) p.m = *opt.m;
    if (opt.alpha) p.alpha = *opt.alpha;
    if (opt.a) p.a = *opt.a;
    if (opt.p) p.p = *opt.p;
    p.validate();
    return p;
}

// ---------------------------------------------------------------------------
// constants
// ---------------------------------------------------------------------------

const double kQ0FlagShip = 3.6342411856642793; // 48^{1/3}
const double kKernelIntegralT3A1N2 = 2.0943951023931953; // 2 pi / 3, closed form

} // namespace

SuiteReport verify_constants(const SuiteOptions& opt) {
    const Params params = resolve_params(opt, Params(5, 1, 1.0, 0.0, 4.0));
    const std::uint64_t seed = opt.seed;
    std::vector<CaseSpec> specs;

    auto simple = [&](std::string id, std::string desc, std::function<double()> computed,
                      double expected, double tol, TolPolicy pol) {
        specs.push_back({id, [=]() { return make_case(id, desc, computed(), expected, tol, pol); }});
    };

    simple("c01_gamma_one", "Gamma(1) = 0! [rel]", [] { return gamma_fn(1.0); }, 1.0, 1e-13,
           TolPolicy::Rel);
    simple("c02_gamma_half", "Gamma(1/2) = sqrt(pi) [rel]", [] { return gamma_fn(0.5); },
           std::sqrt(M_PI), 1e-13, TolPolicy::Rel);
    simple("c03_gamma_four", "Gamma(4) = 3! [rel]", [] { return gamma_fn(4.0); }, 6.0, 1e-13,
           TolPolicy::Rel);
    specs.push_back({"c04_gamma_recurrence", [=]() {
        std::mt19937_64 rng(seed ^ 0x5eedf00dULL);
        std::uniform_real_distribution<double> dist(0.1, 30.0);
        double worst = 0.0;
        for (int i = 0; i < 1000; ++i) {
            const double x = dist(rng);
            worst = std::max(worst, std::abs(gamma_fn(x + 1.0) / (x * gamma_fn(x)) - 1.0));
        }
        return make_case("c04_gamma_recurrence",
                         "max rel defect of Gamma(x+1) = x Gamma(x), 1000 seeded x in (0.1,30) [abs]",
                         worst, 0.0, 1e-12, TolPolicy::Abs);
    }});
    simple("c05_fraclap_n1_a1", "c(1,1) = 1/pi [rel]", [] { return frac_lap_constant(1, 1.0); },
           1.0 / M_PI, 1e-13, TolPolicy::Rel);
    simple("c06_fraclap_n2_a1", "c(2,1) = 1/(2 pi) [rel]", [] { return frac_lap_constant(2, 1.0); },
           0.5 / M_PI, 1e-13, TolPolicy::Rel);
    simple("c07_riesz_2_3", "R_{2,3} = 1/(4 pi), Newtonian sanity value [rel]",
           [] { return riesz_constant(2.0, 3); }, 0.25 / M_PI, 1e-13, TolPolicy::Rel);
    simple("c08_riesz_3_5", "R_{3,5} = 1/(4 pi^3) [rel]", [] { return riesz_constant(3.0, 5); },
           0.25 / std::pow(M_PI, 3), 1e-13, TolPolicy::Rel);
    simple("c09_poisson_2_1", "Poisson constant (2,1) = 1/pi^2 [rel]",
           [] { return poisson_constant(2, 1.0); }, 1.0 / (M_PI * M_PI), 1e-13, TolPolicy::Rel);
    simple("c10_poisson_3_1", "Poisson constant (3,1) = 1/(2 pi^2) [rel]",
           [] { return poisson_constant(3, 1.0); }, 0.5 / (M_PI * M_PI), 1e-13, TolPolicy::Rel);
    simple("c11_meanvalue_a1", "K(1) = 2/pi [rel]", [] { return mean_value_constant(1.0); },
           2.0 / M_PI, 1e-13, TolPolicy::Rel);
    simple("c12_meanvalue_a05", "K(1/2) = sqrt(2)/pi [rel]",
           [] { return mean_value_constant(0.5); }, std::sqrt(2.0) / M_PI, 1e-13, TolPolicy::Rel);
    simple("c13_iconst_1_5", "I(1) in n=5 equals pi^3/12 [rel]", [] { return i_const(1.0, 5); },
           std::pow(M_PI, 3) / 12.0, 1e-13, TolPolicy::Rel);
    simple("c14_iconst_1_4", "I(1) in n=4 equals pi^2/2 [rel]", [] { return i_const(1.0, 4); },
           M_PI * M_PI / 2.0, 1e-13, TolPolicy::Rel);
    simple("c15_kernel_integral_t0", "kernel integral at T=0 vanishes [abs]",
           [] { return incomplete_kernel_integral(0.0, 1.0, 3); }, 0.0, 0.0, TolPolicy::Abs);
    simple("c16_kernel_integral_inf", "kernel integral at T=inf is B(1/2,1) = 2 [rel]",
           [] { return incomplete_kernel_integral(std::numeric_limits<double>::infinity(), 1.0, 3); },
           2.0, 1e-12, TolPolicy::Rel);
    simple("c17_kernel_integral_t3",
           "kernel integral T=3, (alpha,n)=(1,2): closed form 2 arctan(sqrt 3) = 2 pi/3 [rel]",
           [] { return incomplete_kernel_integral(3.0, 1.0, 2); }, kKernelIntegralT3A1N2, 1e-11,
           TolPolicy::Rel);
    simple("c18_pc_a0", "p_c(0) for (n,m,alpha)=(5,1,1) equals 4 [abs]",
           [] { return critical_exponent(Params(5, 1, 1.0, 0.0, 1.0)); }, 4.0, 1e-13,
           TolPolicy::Abs);
    simple("c19_pc_a1", "p_c(1) for (n,m,alpha)=(5,1,1) equals 5 [abs]",
           [] { return critical_exponent(Params(5, 1, 1.0, 1.0, 1.0)); }, 5.0, 1e-13,
           TolPolicy::Abs);
    simple("c20_bubble_prefactor", "bubble prefactor (5,1,1) equals 48^{1/3} [rel]",
           [] { return Bubble(Params(5, 1, 1.0, 0.0, 4.0), 1.0, zero_vec(5)).prefactor(); },
           kQ0FlagShip, 1e-12, TolPolicy::Rel);

    for (double a : {0.3, 1.0, 1.7}) {
        const int tag = static_cast<int>(a * 10 + 0.5);
        const std::string id = "c21_ring_norm_a" + std::to_string(tag);
        specs.push_back({id, [=]() {
            QuadConfig cfg;
            cfg.abs_tol = cfg.rel_tol = 1e-12;
            auto g = [](double) { return 0.5; };
            const double integral =
                integrate_power_endpoints(g, 0.0, 1.0, 0.5 * a - 1.0, -0.5 * a, cfg);
            return make_case(id,
                             "K(alpha) x ring weight integral = 1 (Beta oracle, alpha=" +
                                 format_real(a) + ") [abs]",
                             mean_value_constant(a) * integral, 1.0, pick_tol(opt, 1e-8),
                             TolPolicy::Abs);
        }});
    }

    return execute("constants", params, seed, std::move(specs));
}

// ---------------------------------------------------------------------------
// kelvin
// ---------------------------------------------------------------------------

SuiteReport verify_kelvin(const SuiteOptions& opt) {
    const Params params = resolve_params(opt, Params(5, 1, 1.0, 0.0, 4.0));
    const std::uint64_t seed = opt.seed;
    const int n = params.n;
    std::vector<CaseSpec> specs;

    // Smooth strictly-positive test field.
    ScalarField u;
    u.dim = n;
    u.eval = [n](const Vec& x) {
        const Vec e1 = basis_vec(n, 0);
        return std::exp(-x.norm_sq() / 4.0) + 1.0 / (1.0 + (x - e1).norm_sq());
    };
    u.smoothness_radius = 1e30;

    auto random_point = [n](std::mt19937_64& rng, double r_lo, double r_hi) {
        std::normal_distribution<double> gauss(0.0, 1.0);
        std::uniform_real_distribution<double> rad(r_lo, r_hi);
        Vec x(n);
        double norm = 0.0;
        do {
            for (int i = 0; i < n; ++i) x[i] = gauss(rng);
            norm = x.norm();
        } while (norm < 1e-6);
        return (rad(rng) / norm) * x;
    };

    specs.push_back({"k01_involution", [=]() {
        std::mt19937_64 rng(seed ^ 0x6b656c76ULL);
        std::uniform_real_distribution<double> lam(0.5, 2.0);
        double worst = 0.0;
        for (int i = 0; i < 1000; ++i) {
            const double lambda = lam(rng);
            std::mt19937_64 inner(rng());
            const Vec x = random_point(inner, 0.3, 3.0);
            const ScalarField ul = kelvin_field(u, params, lambda);
            const double twice = kelvin_transform(ul, params, lambda, x);
            const double base = u.eval(x);
            worst = std::max(worst, std::abs(twice - base) / std::max(1e-30, std::abs(base)));
        }
        return make_case("k01_involution",
                         "max rel defect of (u_lambda)_lambda = u over 1000 seeded (lambda, x) [abs]",
                         worst, 0.0, pick_tol(opt, 1e-12), TolPolicy::Abs);
    }});

    specs.push_back({"k02_bubble_invariance", [=]() {
        Params bp = params.subcritical_geometry() ? params : Params(5, 1, 1.0, 0.0, 4.0);
        const Bubble bubble(bp, 1.0, zero_vec(bp.n));
        const ScalarField q = bubble_field(bubble);
        std::mt19937_64 rng(seed ^ 0x62756262ULL);
        double worst = 0.0;
        for (int i = 0; i < 100; ++i) {
            std::mt19937_64 inner(rng());
            std::normal_distribution<double> gauss(0.0, 1.0);
            std::uniform_real_distribution<double> rad(0.2, 4.0);
            Vec x(bp.n);
            double norm = 0.0;
            do {
                for (int j = 0; j < bp.n; ++j) x[j] = gauss(inner);
                norm = x.norm();
            } while (norm < 1e-6);
            x = (rad(inner) / norm) * x;
            const double tv = kelvin_transform(q, bp, 1.0, x);
            const double qv = q.eval(x);
            worst = std::max(worst, std::abs(tv - qv) / qv);
        }
        return make_case("k02_bubble_invariance",
                         "Q is fixed by the lambda=1 Kelvin transform: max rel defect, 100 points [abs]",
                         worst, 0.0, pick_tol(opt, 1e-12), TolPolicy::Abs);
    }});

    specs.push_back({"k03_constant_deficit", [=]() {
        const double cval = 2.5;
        const ScalarField cf = constant_field(n, cval);
        const double lambda = 1.3;
        const Vec x = 0.4 * basis_vec(n, 0);
        const double expected =
            cval * (std::pow(lambda / x.norm(), params.n - params.gamma()) - 1.0);
        const double got = kelvin_deficit(cf, params, lambda, x);
        return make_case("k03_constant_deficit",
                         "deficit of a constant equals c((lambda/|x|)^{n-2m-alpha} - 1) [rel]", got,
                         expected, pick_tol(opt, 1e-12), TolPolicy::Rel);
    }});

    specs.push_back({"k04_sphere_fixed", [=]() {
        std::mt19937_64 rng(seed ^ 0x73706872ULL);
        const double lambda = 0.8;
        double worst = 0.0;
        for (int i = 0; i < 100; ++i) {
            std::mt19937_64 inner(rng());
            Vec x = random_point(inner, lambda, lambda);
            x = (lambda / x.norm()) * x; // exactly on the fixed sphere
            const double tv = kelvin_transform(u, params, lambda, x);
            const double uv = u.eval(x);
            worst = std::max(worst, std::abs(tv - uv) / std::max(1e-30, std::abs(uv)));
        }
        return make_case("k04_sphere_fixed",
                         "inversion fixes the sphere |x| = lambda: max rel defect, 100 points [abs]",
                         worst, 0.0, pick_tol(opt, 1e-12), TolPolicy::Abs);
    }});

    specs.push_back({"k05_deficit_domain_guard", [=]() {
        bool fired = false;
        try {
            (void)kelvin_deficit(u, params, 1.0, 2.0 * basis_vec(n, 0));
        } catch (const DomainError&) {
            fired = true;
        }
        return make_expected_error_case("k05_deficit_domain_guard",
                                        "deficit outside the punctured ball raises a domain error",
                                        fired);
    }});

    return execute("kelvin", params, seed, std::move(specs));
}

// ---------------------------------------------------------------------------
// mu
// ---------------------------------------------------------------------------

namespace {

struct ExactGridOutcome {
    bool monotone = true;
    bool rate = true;
    bool classify = true;
};

ExactGridOutcome exact_grid_check() {
    ExactGridOutcome out;
    const Rational halves[3] = {Rational(1, 2), Rational(1), Rational(3, 2)};
    for (int n = 2; n <= 10; ++n) {
        for (int m = 1; m <= 3; ++m) {
            for (const Rational& alpha : halves) {
                for (int ai = 0; ai <= 1; ++ai) {
                    RationalParams rp;
                    rp.n = n;
                    rp.m = m;
                    rp.alpha = alpha;
                    rp.a = Rational(ai);
                    if (!rp.subcritical_geometry()) continue;
                    const Rational pc = rp.critical_exponent();
                    for (int j = 1; j <= 20; ++j) {
                        rp.p = pc * Rational(j, 21);
                        const Rational mu0 = mu0_default_exact(rp);
                        const auto seq = mu_sequence_exact(rp, 24, mu0);
                        for (std::size_t k = 0; k + 1 < seq.size(); ++k)
                            if (!(seq[k + 1] < seq[k])) out.monotone = false;
                        if (rp.p < Rational(1)) {
                            const Rational limit = mu_limit_exact(rp);
                            Rational pk(1);
                            for (std::size_t k = 0; k < seq.size(); ++k) {
                                if (seq[k] - limit != pk * (mu0 - limit)) out.rate = false;
                                pk *= rp.p;
                            }
                        }
                        const Regime reg = classify_regime_exact(rp);
                        const bool tau_pos = rp.tau() > Rational(0);
                        if ((reg == Regime::Subcritical) != tau_pos) out.classify = false;
                    }
                    // Tie case p = p_c: tau must vanish identically.
                    RationalParams tie = rp;
                    tie.p = pc;
                    if (!(tie.tau() == Rational(0)) ||
                        classify_regime_exact(tie) != Regime::Critical)
                        out.classify = false;
                }
            }
        }
    }
    return out;
}

} // namespace

SuiteReport verify_mu(const SuiteOptions& opt) {
    const Params params = resolve_params(opt, Params(5, 1, 1.0, 0.0, 0.5));
    const int k_max = opt.samples.value_or(24);
    std::vector<CaseSpec> specs;

    specs.push_back({"m01_limit", [=]() {
        const double limit = mu_limit(params);
        const double expected = params.p < 1.0
                                    ? -(params.a + params.gamma()) / (1.0 - params.p)
                                    : -std::numeric_limits<double>::infinity();
        if (std::isinf(expected)) {
            return make_case("m01_limit", "mu limit sentinel -inf for 1 <= p < p_c [abs]",
                             std::isinf(limit) && limit < 0.0 ? 1.0 : 0.0, 1.0, 0.0,
                             TolPolicy::Abs);
        }
        return make_case("m01_limit", "mu limit equals -(a+2m+alpha)/(1-p) [abs]", limit, expected,
                         pick_tol(opt, 1e-12), TolPolicy::Abs);
    }});

    specs.push_back({"m02_monotone", [=]() {
        const MuState st = mu_sequence(params, k_max);
        bool strict = true;
        for (std::size_t k = 0; k + 1 < st.sequence.size(); ++k)
            strict = strict && st.sequence[k + 1] < st.sequence[k];
        return make_case("m02_monotone",
                         "strict decrease of mu_k, default mu0, k <= " + std::to_string(k_max) +
                             " [abs]",
                         strict ? 1.0 : 0.0, 1.0, 0.0, TolPolicy::Abs);
    }});

    if (params.p < 1.0) {
        specs.push_back({"m03_linear_rate", [=]() {
            const MuState st = mu_sequence(params, k_max);
            const double limit = mu_limit(params);
            const double lhs = std::abs(st.sequence.back() - limit);
            const double rhs = std::pow(params.p, k_max) * std::abs(st.sequence.front() - limit);
            return make_case("m03_linear_rate",
                             "|mu_k - L| = p^k |mu_0 - L| at k = " + std::to_string(k_max) +
                                 " [rel]",
                             lhs, rhs, pick_tol(opt, 1e-9), TolPolicy::Rel);
        }});
    }

    specs.push_back({"m04_exact_grid", [=]() {
        const ExactGridOutcome out = exact_grid_check();
        return make_case("m04_exact_grid",
                         "exact rational grid (n<=10, m<=3, alpha in {1/2,1,3/2}, a in {0,1}, 20 "
                         "p-values): monotone decrease and linear rate [abs]",
                         out.monotone && out.rate ? 1.0 : 0.0, 1.0, 0.0, TolPolicy::Abs);
    }});

    specs.push_back({"m05_regime_guard", [=]() {
        bool fired = false;
        try {
            Params bad = params;
            bad.p = critical_exponent(params);
            (void)mu_sequence(bad, 4);
        } catch (const DomainError&) {
            fired = true;
        }
        return make_expected_error_case("m05_regime_guard",
                                        "p = p_c(a) is rejected by the recurrence", fired);
    }});

    specs.push_back({"m06_classify_consistency", [=]() {
        const ExactGridOutcome out = exact_grid_check();
        return make_case("m06_classify_consistency",
                         "Subcritical iff tau > 0 and Critical iff tau = 0, exact on the grid [abs]",
                         out.classify ? 1.0 : 0.0, 1.0, 0.0, TolPolicy::Abs);
    }});

    return execute("mu", params, opt.seed, std::move(specs));
}

// ---------------------------------------------------------------------------
// green-poisson
// ---------------------------------------------------------------------------

SuiteReport verify_green_poisson(const SuiteOptions& opt) {
    Params defaults(1, 0, 1.0, 0.0, 1.0);
    const Params params = resolve_params(opt, defaults);
    const int n = params.n;
    if (n < 1 || n > 3)
        throw DomainError("verify_green_poisson: supported for n in {1,2,3}");
    const double alpha = params.alpha;
    const double radius = opt.radius.value_or(1.0);
    const double kmag = 1.0;

    const Vec center = 0.2 * basis_vec(n, 0);
    const Ball ball(center, radius);
    const Vec kvec = kmag * basis_vec(n, 0);

    const ScalarField ucos = cosine_field(kvec);
    ScalarField v0;
    v0.dim = n;
    const double symbol = std::pow(kmag, alpha);
    v0.eval = [kvec, symbol](const Vec& x) { return symbol * std::cos(dot(kvec, x)); };
    v0.smoothness_radius = 1e30;

    QuadConfig cfg;
    cfg.abs_tol = cfg.rel_tol = 1e-9;

    std::vector<CaseSpec> specs;
    specs.push_back({"gp01_constant_field", [=]() {
        const ScalarField one = constant_field(n, 1.0);
        const ScalarField zero = constant_field(n, 0.0);
        const Vec x = center + 0.1 * radius * basis_vec(n, 0);
        const double got = green_poisson_reconstruct(one, zero, ball, alpha, x, cfg);
        return make_case("gp01_constant_field",
                         "reconstruction of u = 1 (pure Poisson normalization) [abs]", got, 1.0,
                         pick_tol(opt, 1e-6), TolPolicy::Abs);
    }});

    const struct {
        const char* id;
        double offset;
    } points[3] = {{"gp02_cos_center", 0.0}, {"gp03_cos_plus", 0.4}, {"gp04_cos_minus", -0.35}};
    for (const auto& pt : points) {
        const std::string id = pt.id;
        const double offset = pt.offset;
        specs.push_back({id, [=]() {
            const Vec x = center + offset * radius * basis_vec(n, 0);
            const double got = green_poisson_reconstruct(ucos, v0, ball, alpha, x, cfg);
            const double expected = std::cos(dot(kvec, x));
            return make_case(id,
                             "cos field reconstruction, Fourier-symbol v0, offset " +
                                 format_real(offset) + " [abs|rel]",
                             got, expected, pick_tol(opt, 1e-3), TolPolicy::AbsOrRel);
        }});
    }

    specs.push_back({"gp05_radius_independence", [=]() {
        const Vec x = center;
        const double got_r = green_poisson_reconstruct(ucos, v0, ball, alpha, x, cfg);
        const Ball doubled(center, 2.0 * radius);
        const double got_2r = green_poisson_reconstruct(ucos, v0, doubled, alpha, x, cfg);
        return make_case("gp05_radius_independence",
                         "reconstruction is radius-independent: value at 2R vs R [abs|rel]", got_2r,
                         got_r, pick_tol(opt, 2e-3), TolPolicy::AbsOrRel);
    }});

    return execute("green-poisson", params, opt.seed, std::move(specs));
}

// ---------------------------------------------------------------------------
// riesz-semigroup
// ---------------------------------------------------------------------------

namespace {

double riesz_composition(int n, double a1, double a2, double dist, const QuadConfig& cfg) {
    if (!(a1 > 0.0 && a1 < n && a2 > 0.0 && a2 < n))
        throw DomainError("riesz_composition: exponents must lie in (0, n)");
    if (!(a1 + a2 < n))
        throw DivergenceError("riesz_composition: alpha1 + alpha2 >= n diverges");
    if (!(dist > 0.0)) throw DomainError("riesz_composition: need distinct endpoints");

    const double l1 = n - a1;
    const double l2 = n - a2;
    const double cpair = riesz_constant(a1, n) * riesz_constant(a2, n);

    if (n == 1) {
        // Kernel centers at 0 and d; each singular factor is stripped exactly
        // on its own neighborhood, tails mapped by declared decay.
        const double d = dist;
        auto near0 = [&](double y) { return std::pow(std::abs(y - d), -l2); };
        auto neard = [&](double y) { return std::pow(std::abs(y), -l1); };
        auto full = [&](double y) {
            return std::pow(std::abs(y), -l1) * std::pow(std::abs(y - d), -l2);
        };
        const double t0 = std::max(2.0 * d, cfg.tail_cutoff);
        double total = 0.0;
        total += integrate_power_endpoints(near0, -0.5 * d, 0.0, 0.0, -l1, cfg);
        total += integrate_power_endpoints(near0, 0.0, 0.5 * d, -l1, 0.0, cfg);
        total += integrate_power_endpoints(neard, 0.5 * d, d, 0.0, -l2, cfg);
        total += integrate_power_endpoints(neard, d, 1.5 * d, -l2, 0.0, cfg);
        total += integrate_adaptive(full, 1.5 * d, t0, cfg);
        auto reflected = [&](double y) { return full(-y); };
        total += integrate_adaptive(reflected, 0.5 * d, t0, cfg);
        total += integrate_tail(full, l1 + l2, t0, cfg);
        total += integrate_tail(reflected, l1 + l2, t0, cfg);
        return cpair * total;
    }
    if (n == 3) {
        auto prof = [&](double r) { return std::pow(r, -l2); };
        return cpair * integrate_radial_nd(prof, l1, dist, n, l2, cfg);
    }
    throw DomainError("riesz_composition: supported for n in {1,3}");
}

} // namespace

SuiteReport verify_riesz_semigroup(const SuiteOptions& opt) {
    Params defaults(1, 0, 0.4, 0.0, 1.0);
    const Params params = resolve_params(opt, defaults);
    const int n = params.n;
    if (n != 1 && n != 3) throw DomainError("verify_riesz_semigroup: supported for n in {1,3}");
    const double a1 = params.alpha;
    const double a2 = params.alpha;

    QuadConfig cfg;
    cfg.abs_tol = cfg.rel_tol = 1e-9;

    std::vector<CaseSpec> specs;
    const struct {
        const char* id;
        double dist;
    } dists[3] = {{"rs01_dist_half", 0.5}, {"rs02_dist_one", 1.0}, {"rs03_dist_two", 2.0}};
    for (const auto& dd : dists) {
        const std::string id = dd.id;
        const double dist = dd.dist;
        specs.push_back({id, [=]() {
            const double got = riesz_composition(n, a1, a2, dist, cfg);
            const double expected =
                riesz_constant(a1 + a2, n) * std::pow(dist, (a1 + a2) - n);
            return make_case(id,
                             "I_{a1} o I_{a2} kernel vs R_{a1+a2,n}|x-z|^{a1+a2-n} at distance " +
                                 format_real(dist) + " [rel]",
                             got, expected, pick_tol(opt, 1e-3), TolPolicy::Rel);
        }});
    }

    specs.push_back({"rs04_homogeneity", [=]() {
        const double v1 = riesz_composition(n, a1, a2, 1.0, cfg);
        const double v2 = riesz_composition(n, a1, a2, 2.0, cfg);
        return make_case("rs04_homogeneity",
                         "scaling: value(2)/value(1) = 2^{a1+a2-n} [abs|rel]", v2 / v1,
                         std::pow(2.0, a1 + a2 - n), pick_tol(opt, 2e-3), TolPolicy::AbsOrRel);
    }});

    specs.push_back({"rs05_divergence_guard", [=]() {
        bool fired = false;
        try {
            (void)riesz_composition(n, 0.6 * n, 0.6 * n, 1.0, cfg);
        } catch (const DivergenceError&) {
            fired = true;
        }
        return make_expected_error_case("rs05_divergence_guard",
                                        "alpha1 + alpha2 >= n is rejected as divergent", fired);
    }});

    return execute("riesz-semigroup", params, opt.seed, std::move(specs));
}

// ---------------------------------------------------------------------------
// bubble-ie
// ---------------------------------------------------------------------------

SuiteReport verify_bubble_ie(const SuiteOptions& opt) {
    Params params = resolve_params(opt, Params(5, 1, 1.0, 0.0, 4.0));
    if (!params.subcritical_geometry())
        throw DomainError("verify_bubble_ie: requires 2m + alpha < n");
    const double pc = critical_exponent(params);
    if (!opt.p) params.p = pc;
    if (std::abs(params.p - pc) > 1e-12)
        throw DomainError("verify_bubble_ie: the integral equation holds at p = p_c(0)");
    const int n = params.n;
    const double gamma = params.gamma();

    QuadConfig cfg;
    cfg.abs_tol = cfg.rel_tol = 1e-9;

    std::vector<CaseSpec> specs;
    const bool flagship = n == 5 && params.m == 1 && params.alpha == 1.0;
    if (flagship) {
        specs.push_back({"bi01_q0_closed_form", [=]() {
            const Bubble bubble(params, 1.0, zero_vec(n));
            return make_case("bi01_q0_closed_form",
                             "Q(0) = (R_{3,5} I(1))^{-1/3} = 48^{1/3} from the constants [rel]",
                             bubble_value(bubble, zero_vec(n)), kQ0FlagShip,
                             pick_tol(opt, 1e-12), TolPolicy::Rel);
        }});
    }

    const struct {
        const char* id;
        double radius;
    } radii[4] = {{"bi02_radius_0", 0.0},
                  {"bi03_radius_05", 0.5},
                  {"bi04_radius_1", 1.0},
                  {"bi05_radius_2", 2.0}};
    for (const auto& rr : radii) {
        const std::string id = rr.id;
        const double rho = rr.radius;
        specs.push_back({id, [=]() {
            const Bubble bubble(params, 1.0, zero_vec(n));
            const ScalarField rhs = bubble_rhs_field(bubble);
            const Vec x = rho * basis_vec(n, 0);
            const double got = riesz_potential(rhs, gamma, x, cfg);
            const double expected = bubble_value(bubble, x);
            return make_case(id,
                             "Riesz potential of Q^{p_c} reproduces Q at |x| = " +
                                 format_real(rho) + " [rel]",
                             got, expected, pick_tol(opt, 1e-3), TolPolicy::Rel);
        }});
    }

    specs.push_back({"bi06_conformal_family", [=]() {
        const Bubble bubble(params, 2.0, 0.3 * basis_vec(n, 0));
        const ScalarField rhs = bubble_rhs_field(bubble);
        const Vec x = bubble.x0 + 0.7 * basis_vec(n, 0);
        const double got = riesz_potential(rhs, gamma, x, cfg);
        const double expected = bubble_value(bubble, x);
        return make_case("bi06_conformal_family",
                         "integral equation closed under mu/x0 rescaling (mu=2, shifted center) [rel]",
                         got, expected, pick_tol(opt, 1e-3), TolPolicy::Rel);
    }});

    return execute("bubble-ie", params, opt.seed, std::move(specs));
}

// ---------------------------------------------------------------------------
// superpoly
// ---------------------------------------------------------------------------

SuiteReport verify_superpoly(const SuiteOptions& opt) {
    Params params = resolve_params(opt, Params(5, 1, 1.0, 0.0, 4.0));
    if (!params.subcritical_geometry() || 2 * params.m >= params.n)
        throw DomainError("verify_superpoly: requires 2m < n and 2m + alpha < n");
    if (params.m < 1) throw DomainError("verify_superpoly: requires m >= 1");
    params.p = critical_exponent(params);
    const int n = params.n;
    const int m = params.m;

    QuadConfig tight;
    tight.abs_tol = tight.rel_tol = 5e-12;
    tight.max_depth = 54;

    const Bubble bubble(params, 1.0, zero_vec(n));
    const ScalarField f = bubble_rhs_field(bubble);
    const double fd_step = 1e-2;

    // v_i profile evaluated on demand with a tiny per-case memo (the FD stencil
    // revisits the base point).
    auto make_vi = [=](int i) {
        return [=](double r) {
            return riesz_potential(f, 2.0 * (m - i), r * basis_vec(n, 0), tight);
        };
    };

    std::vector<CaseSpec> specs;
    const double sample_radii[3] = {0.5, 1.0, 2.0};

    for (int i = 0; i < m; ++i) {
        const std::string pid = "sp1_positivity_v" + std::to_string(i);
        specs.push_back({pid, [=]() {
            auto vi = make_vi(i);
            double low = std::numeric_limits<double>::infinity();
            for (double r : {0.0, 0.5, 1.0, 2.0, 4.0}) low = std::min(low, vi(r));
            return make_case(pid,
                             "v_" + std::to_string(i) +
                                 " = I_{2m-2i}(Q^{p_c}) strictly positive at all samples "
                                 "(pass iff computed > 0; expected mirrors |computed|) [abs]",
                             low, std::abs(low), 0.0, TolPolicy::Abs);
        }});

        for (double r : sample_radii) {
            const int tag = static_cast<int>(r * 10 + 0.5);
            const std::string id =
                "sp2_chain_i" + std::to_string(i) + "_r" + std::to_string(tag);
            specs.push_back({id, [=]() {
                auto vi_raw = make_vi(i);
                auto cache = std::make_shared<std::map<double, double>>();
                auto vi = [=](double rr) {
                    auto it = cache->find(rr);
                    if (it != cache->end()) return it->second;
                    const double val = vi_raw(rr);
                    (*cache)[rr] = val;
                    return val;
                };
                const double got = neg_radial_laplacian_fd(vi, r, n, fd_step);
                double expected;
                if (i + 1 == m) {
                    expected = f.profile(r);
                } else {
                    expected = riesz_potential(f, 2.0 * (m - i - 1), r * basis_vec(n, 0), tight);
                }
                return make_case(id,
                                 "-Delta_radial v_" + std::to_string(i) + " = v_" +
                                     std::to_string(i + 1) + " at r = " + format_real(r) +
                                     " (FD with one Richardson level, h = 1e-2) [rel]",
                                 got, expected, pick_tol(opt, 1e-3), TolPolicy::Rel);
            }});
        }
    }

    return execute("superpoly", params, opt.seed, std::move(specs));
}

// ---------------------------------------------------------------------------
// mean-value
// ---------------------------------------------------------------------------

namespace {

// Radial alpha-harmonic extension of an exterior radial datum, tabulated with
// a sqrt boundary layer so the (R - s)^{alpha/2} edge behavior splines cleanly.
ScalarField poisson_extension_field_radial(const ScalarField& datum, const Ball& ball,
                                           double alpha, const QuadConfig& cfg, int samples) {
    const int n = datum.dim;
    const double r0 = ball.radius;
    const double layer = std::min(0.25 * r0, 0.5);
    const double smooth_hi = r0 - layer;

    auto direct = [&](double s) {
        return poisson_extension(datum, ball, alpha, s * basis_vec(n, 0), cfg);
    };

    const int n_smooth = std::max(32, samples);
    std::vector<double> xs(static_cast<std::size_t>(n_smooth)),
        ys(static_cast<std::size_t>(n_smooth));
    for (int j = 0; j < n_smooth; ++j) {
        const double t = std::cos(M_PI * (n_smooth - 1 - j) / (n_smooth - 1));
        xs[static_cast<std::size_t>(j)] = 0.5 * smooth_hi * (1.0 + t);
    }
    xs.front() = 0.0;
    xs.back() = smooth_hi;
    parallel::for_each_index(n_smooth, [&](std::int64_t j) {
        ys[static_cast<std::size_t>(j)] = direct(xs[static_cast<std::size_t>(j)]);
    });
    auto smooth_spline = std::make_shared<CubicSpline>(xs, ys);

    const int n_layer = std::max(24, samples / 2);
    const double xi_max = std::sqrt(layer);
    std::vector<double> lx(static_cast<std::size_t>(n_layer)),
        ly(static_cast<std::size_t>(n_layer));
    for (int j = 0; j < n_layer; ++j)
        lx[static_cast<std::size_t>(j)] = xi_max * j / (n_layer - 1);
    parallel::for_each_index(n_layer, [&](std::int64_t j) {
        const double xi = lx[static_cast<std::size_t>(j)];
        const double s = r0 - xi * xi;
        ly[static_cast<std::size_t>(j)] =
            j == 0 ? datum.profile(r0) : direct(std::min(s, r0 * (1.0 - 1e-12)));
    });
    // Stored against xi with xi increasing; s decreasing toward the boundary.
    auto layer_spline = std::make_shared<CubicSpline>(lx, ly);

    auto datum_profile = datum.profile;
    auto prof = [=](double s) {
        if (s >= r0) return datum_profile(s);
        if (s > smooth_hi) return (*layer_spline)(std::sqrt(r0 - s));
        return (*smooth_spline)(s);
    };
    ScalarField u = radial_field(n, ball.center, prof, datum.decay_exponent);
    u.profile_breaks = {smooth_hi, r0};
    return u;
}

} // namespace

SuiteReport verify_mean_value(const SuiteOptions& opt) {
    Params defaults(2, 0, 1.0, 0.0, 1.0);
    const Params params = resolve_params(opt, defaults);
    const int n = params.n;
    if (n != 2 && n != 3)
        throw DomainError("verify_mean_value: nested quadrature budget limits n to {2,3}");
    const double alpha = params.alpha;
    const double r0 = opt.radius.value_or(2.0);
    const Ball ball(zero_vec(n), r0);
    const int samples = opt.samples.value_or(220);

    QuadConfig cfg;
    cfg.abs_tol = cfg.rel_tol = 1e-9;
    QuadConfig build_cfg = cfg.tightened(0.1);

    // Shared expensive fields, built once.
    const ScalarField datum = gaussian_field(zero_vec(n), 2.0);
    const ScalarField uext = poisson_extension_field_radial(datum, ball, alpha, build_cfg, samples);

    const ScalarField bump = bump_field(n);
    auto bump_potential = [&](double s) {
        return riesz_potential(bump, alpha, s * basis_vec(n, 0), build_cfg);
    };
    const ScalarField upot = tabulated_radial_field(n, zero_vec(n), bump_potential, 48.0,
                                                    std::max(160, samples), n - alpha, {1.0});

    std::vector<CaseSpec> specs;

    specs.push_back({"mv01_ring_constant", [=]() {
        const ScalarField one = constant_field(n, 1.0);
        const double got = ring_average(one, 0.3 * basis_vec(n, 0), 0.7, alpha, cfg);
        return make_case("mv01_ring_constant",
                         "ring average of 1 is 1 (Beta-integral normalization) [abs]", got, 1.0,
                         pick_tol(opt, 1e-8), TolPolicy::Abs);
    }});

    struct EqCase {
        const char* id;
        double off_x, off_y, rho;
    };
    const EqCase eqs[4] = {{"mv02_eq_center_r05", 0.0, 0.0, 0.5},
                           {"mv03_eq_y04_r05", 0.4, 0.0, 0.5},
                           {"mv04_eq_y04_r09", 0.4, 0.0, 0.9},
                           {"mv05_eq_diag_r07", -0.3, 0.2, 0.7}};
    for (const EqCase& e : eqs) {
        const std::string id = e.id;
        specs.push_back({id, [=]() {
            Vec y(n);
            y[0] = e.off_x;
            if (n >= 2) y[1] = e.off_y;
            const double got = ring_average(uext, y, e.rho, alpha, cfg);
            const double expected = uext.eval(y);
            return make_case(id,
                             "alpha-harmonic Poisson extension: ring average equals the center "
                             "value (independent quadrature routes) [abs|rel]",
                             got, expected, pick_tol(opt, 1e-3), TolPolicy::AbsOrRel);
        }});
    }

    const struct {
        const char* id;
        double off, rho;
    } ineqs[2] = {{"mv06_ineq_center_r06", 0.0, 0.6}, {"mv07_ineq_y03_r12", 0.3, 1.2}};
    for (const auto& e : ineqs) {
        const std::string id = e.id;
        specs.push_back({id, [=]() {
            const Vec y = e.off * basis_vec(n, 0);
            const double ring = ring_average(upot, y, e.rho, alpha, cfg);
            const double margin = upot.eval(y) - ring;
            return make_case(id,
                             "bump potential has (-Delta)^{alpha/2} u >= 0: center value "
                             "dominates the ring average (computed = min(margin, 0)) [abs]",
                             std::min(margin, 0.0), 0.0, pick_tol(opt, 1e-6), TolPolicy::Abs);
        }});
    }

    specs.push_back({"mv08_poisson_norm_offcenter", [=]() {
        const ScalarField one = constant_field(n, 1.0);
        const double got =
            poisson_extension(one, ball, alpha, 0.5 * r0 * basis_vec(n, 0), cfg);
        return make_case("mv08_poisson_norm_offcenter",
                         "Poisson kernel integrates to 1 at |x| = R/2 [abs]", got, 1.0,
                         pick_tol(opt, 1e-6), TolPolicy::Abs);
    }});

    return execute("mean-value", params, opt.seed, std::move(specs));
}

// ---------------------------------------------------------------------------
// dispatch + constants object
// ---------------------------------------------------------------------------

std::vector<std::string> suite_names() {
    return {"constants",  "mean-value", "green-poisson", "riesz-semigroup",
            "bubble-ie",  "superpoly",  "kelvin",        "mu"};
}

SuiteReport run_suite(const std::string& name, const SuiteOptions& opt) {
    if (name == "constants") return verify_constants(opt);
    if (name == "mean-value") return verify_mean_value(opt);
    if (name == "green-poisson") return verify_green_poisson(opt);
    if (name == "riesz-semigroup") return verify_riesz_semigroup(opt);
    if (name == "bubble-ie") return verify_bubble_ie(opt);
    if (name == "superpoly") return verify_superpoly(opt);
    if (name == "kelvin") return verify_kelvin(opt);
    if (name == "mu") return verify_mu(opt);
    throw DomainError("run_suite: unknown suite '" + name + "'");
}

std::string constants_json(const Params& params) {
    params.validate();
    const double gamma = params.gamma();
    std::string out = "{\n";
    out += "  \"n\": " + std::to_string(params.n) + ",\n";
    out += "  \"m\": " + std::to_string(params.m) + ",\n";
    out += "  \"alpha\": " + format_real(params.alpha) + ",\n";
    out += "  \"a\": " + format_real(params.a) + ",\n";
    out += "  \"p\": " + format_real(params.p) + ",\n";
    out += "  \"gamma\": " + format_real(gamma) + ",\n";
    out += "  \"tau\": " + format_real(params.tau()) + ",\n";
    out += "  \"frac_lap_constant\": " + format_real(frac_lap_constant(params.n, params.alpha)) + ",\n";
    out += "  \"poisson_constant\": " + format_real(poisson_constant(params.n, params.alpha)) + ",\n";
    out += "  \"mean_value_constant\": " + format_real(mean_value_constant(params.alpha)) + ",\n";
    out += "  \"green_constant\": " + format_real(green_constant(params.n, params.alpha)) + ",\n";
    out += "  \"unit_sphere_area\": " + format_real(unit_sphere_area(params.n));
    if (params.subcritical_geometry()) {
        out += ",\n";
        out += "  \"riesz_constant_gamma\": " + format_real(riesz_constant(gamma, params.n)) + ",\n";
        out += "  \"i_const_gap\": " + format_real(i_const(0.5 * (params.n - gamma), params.n)) + ",\n";
        out += "  \"critical_exponent\": " + format_real(critical_exponent(params)) + ",\n";
        out += "  \"bubble_prefactor\": " +
               format_real(Bubble(params, 1.0, zero_vec(params.n)).prefactor()) + "\n";
    } else {
        out += "\n";
    }
    out += "}\n";
    return out;
}

std::string constants_csv(const Params& params) {
    params.validate();
    const double gamma = params.gamma();
    std::string out = "name,value\n";
    auto row = [&](const char* k, double v) { out += std::string(k) + "," + format_real(v) + "\n"; };
    row("gamma", gamma);
    row("tau", params.tau());
    row("frac_lap_constant", frac_lap_constant(params.n, params.alpha));
    row("poisson_constant", poisson_constant(params.n, params.alpha));
    row("mean_value_constant", mean_value_constant(params.alpha));
    row("green_constant", green_constant(params.n, params.alpha));
    row("unit_sphere_area", unit_sphere_area(params.n));
    if (params.subcritical_geometry()) {
        row("riesz_constant_gamma", riesz_constant(gamma, params.n));
        row("i_const_gap", i_const(0.5 * (params.n - gamma), params.n));
        row("critical_exponent", critical_exponent(params));
        row("bubble_prefactor", Bubble(params, 1.0, zero_vec(params.n)).prefactor());
    }
    return out;
}

} // namespace nlk
