#include "nlk/operators.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "nlk/special_functions.hpp"

namespace nlk {

namespace {

// integrate_power_endpoints with extra interior split points (profile kinks,
// singular shells). Endpoint exponents apply only at the outermost ends.
double power_endpoints_split(FnRef g, double lo, double hi, double e_lo, double e_hi,
                             std::vector<double> splits, const QuadConfig& cfg) {
    splits.erase(std::remove_if(splits.begin(), splits.end(),
                                [&](double s) { return !(s > lo && s < hi); }),
                 splits.end());
    std::sort(splits.begin(), splits.end());
    splits.insert(splits.begin(), lo);
    splits.push_back(hi);
    double total = 0.0;
    for (std::size_t i = 0; i + 1 < splits.size(); ++i) {
        const double a = splits[i], b = splits[i + 1];
        if (!(b > a)) continue;
        total += integrate_power_endpoints(g, a, b, i == 0 ? e_lo : 0.0,
                                           i + 2 == splits.size() ? e_hi : 0.0, cfg);
    }
    return total;
}

// Kink radii of r -> spherical_average(u, center, r) for a radial u with
// profile breaks: spheres about `center` touch the break spheres of u at
// |b - d| and b + d.
std::vector<double> average_break_radii(const ScalarField& u, const Vec& center) {
    std::vector<double> out;
    if (!u.radial) return out;
    const double d = distance(center, u.radial_center);
    for (double b : u.profile_breaks) {
        out.push_back(std::abs(b - d));
        out.push_back(b + d);
    }
    return out;
}

double sphere_mean_radial_offset(const ScalarField& u, double d, double r,
                                 const QuadConfig& cfg) {
    // Mean of profile(sqrt(d^2 + r^2 + 2 d r c)) against the (1-c^2)^{(n-3)/2} weight.
    const int n = u.dim;
    const double nn = std::exp(lgamma_fn(0.5 * n) - lgamma_fn(0.5 * (n - 1))) / std::sqrt(M_PI);
    const double beta_exp = 0.5 * (n - 3.0);
    auto g = [&](double c) { return u.profile(std::sqrt(d * d + r * r + 2.0 * d * r * c)); };
    std::vector<double> splits;
    for (double b : u.profile_breaks) {
        const double cb = (b * b - d * d - r * r) / (2.0 * d * r);
        if (cb > -1.0 && cb < 1.0) splits.push_back(cb);
    }
    return nn * power_endpoints_split(g, -1.0, 1.0, beta_exp, beta_exp, splits, cfg);
}

double sphere_mean_general(const ScalarField& u, const Vec& center, double r,
                           const QuadConfig& cfg, std::uint64_t seed) {
    const int n = u.dim;
    if (n == 2) {
        auto g = [&](double phi) {
            Vec y(2);
            y[0] = center[0] + r * std::cos(phi);
            y[1] = center[1] + r * std::sin(phi);
            return u.eval(y);
        };
        return integrate_adaptive(g, 0.0, 2.0 * M_PI, cfg) / (2.0 * M_PI);
    }
    if (n == 3) {
        const QuadConfig inner = cfg.tightened(0.2);
        auto slice = [&](double c) {
            const double s = std::sqrt(std::max(0.0, 1.0 - c * c));
            auto g = [&](double phi) {
                Vec y(3);
                y[0] = center[0] + r * s * std::cos(phi);
                y[1] = center[1] + r * s * std::sin(phi);
                y[2] = center[2] + r * c;
                return u.eval(y);
            };
            return integrate_adaptive(g, 0.0, 2.0 * M_PI, inner) / (2.0 * M_PI);
        };
        return 0.5 * integrate_adaptive(slice, -1.0, 1.0, cfg);
    }
    // n > 3: deterministic low-discrepancy mean with the configured count.
    const std::vector<Vec> pts = sphere_point_set(n, cfg.sphere_samples, seed);
    const double sum = parallel::sum_indexed(
        static_cast<std::int64_t>(pts.size()),
        [&](std::int64_t i) { return u.eval(center + r * pts[static_cast<std::size_t>(i)]); });
    return sum / static_cast<double>(pts.size());
}

} // namespace

double spherical_average(const ScalarField& u, const Vec& center, double r,
                         const QuadConfig& cfg, std::uint64_t seed) {
    if (!(r > 0.0)) throw DomainError("spherical_average: requires r > 0");
    if (center.size() != u.dim) throw DomainError("spherical_average: dimension mismatch");
    const int n = u.dim;
    if (n == 1) {
        Vec xp = center, xm = center;
        xp[0] += r;
        xm[0] -= r;
        return 0.5 * (u.eval(xp) + u.eval(xm));
    }
    if (u.radial) {
        const double d = distance(center, u.radial_center);
        if (d == 0.0) return u.profile(r);
        return sphere_mean_radial_offset(u, d, r, cfg);
    }
    return sphere_mean_general(u, center, r, cfg, seed);
}

double frac_laplacian(const ScalarField& u, const Vec& x, double alpha, const QuadConfig& cfg) {
    cfg.validate();
    if (!(alpha > 0.0 && alpha < 2.0)) throw DomainError("frac_laplacian: alpha must lie in (0,2)");
    if (x.size() != u.dim) throw DomainError("frac_laplacian: dimension mismatch");
    if (!(u.smoothness_radius > 0.0))
        throw DomainError("frac_laplacian: field must declare a positive smoothness radius");
    if (!in_l_alpha(u, alpha))
        throw DivergenceError("frac_laplacian: field not in L_alpha by declared decay");
    validate_decay(u);

    const int n = u.dim;
    const double ux = u.eval(x);
    const QuadConfig avg_cfg = cfg.tightened(0.02);
    auto mean_defect = [&](double r) { return ux - spherical_average(u, x, r, avg_cfg); };

    const double delta = std::min(cfg.inner_split_radius, u.smoothness_radius);
    const double big_m = std::max(cfg.tail_cutoff, 2.0 * delta);

    // Near zone: fit ubar(r) - u(x) = c2 r^2 + c4 r^4 from r = delta, delta/2
    // and integrate the model against r^{-1-alpha} in closed form.
    const double d_half = -mean_defect(0.5 * delta);
    const double d_full = -mean_defect(delta);
    const double c4 = 4.0 * (d_full - 4.0 * d_half) / (3.0 * std::pow(delta, 4));
    const double c2 = (d_full - c4 * std::pow(delta, 4)) / (delta * delta);
    const double near =
        -(c2 * std::pow(delta, 2.0 - alpha) / (2.0 - alpha) + c4 * std::pow(delta, 4.0 - alpha) / (4.0 - alpha));

    auto integrand = [&](double r) { return mean_defect(r) * std::pow(r, -1.0 - alpha); };
    const double mid = integrate_adaptive(integrand, delta, big_m, cfg);
    const double tail = integrate_tail(integrand, 1.0 + alpha, big_m, cfg);

    return frac_lap_constant(n, alpha) * unit_sphere_area(n) * (near + mid + tail);
}

double riesz_potential(const ScalarField& f, double gamma, const Vec& x, const QuadConfig& cfg) {
    cfg.validate();
    const int n = f.dim;
    if (!(gamma > 0.0 && gamma < static_cast<double>(n)))
        throw DomainError("riesz_potential: requires 0 < gamma < n");
    if (!f.radial) throw DomainError("riesz_potential: implemented for radial densities");
    if (x.size() != n) throw DomainError("riesz_potential: dimension mismatch");
    if (!(f.decay_exponent > gamma))
        throw DivergenceError("riesz_potential: declared decay too slow for convergence");

    const double rho = distance(x, f.radial_center);
    auto prof = [&](double r) { return f.profile(r); };
    return riesz_constant(gamma, n) *
           integrate_radial_nd(prof, static_cast<double>(n) - gamma, rho, n, f.decay_exponent, cfg);
}

double ring_average(const ScalarField& u, const Vec& center, double R, double alpha,
                    const QuadConfig& cfg) {
    cfg.validate();
    if (!(R > 0.0)) throw DomainError("ring_average: requires R > 0");
    if (!(alpha > 0.0 && alpha < 2.0)) throw DomainError("ring_average: alpha must lie in (0,2)");
    if (!in_l_alpha(u, alpha)) throw DivergenceError("ring_average: field not in L_alpha");

    // t = R^2/r^2 compactifies (R, inf) and exposes the exact endpoint powers:
    //   int_R^inf R^alpha/(r (r^2-R^2)^{alpha/2}) ubar(r) dr
    // = int_0^1 t^{alpha/2-1} (1-t)^{-alpha/2} ubar(R/sqrt(t))/2 dt.
    const QuadConfig avg_cfg = cfg.tightened(0.05);
    auto g = [&](double t) { return 0.5 * spherical_average(u, center, R / std::sqrt(t), avg_cfg); };

    std::vector<double> splits;
    for (double rb : average_break_radii(u, center)) {
        if (rb > R) {
            const double t = R * R / (rb * rb);
            if (t > 0.0 && t < 1.0) splits.push_back(t);
        }
    }
    const double integral =
        power_endpoints_split(g, 0.0, 1.0, 0.5 * alpha - 1.0, -0.5 * alpha, splits, cfg);
    return mean_value_constant(alpha) * integral;
}

double green_function_alpha(const Vec& x, const Vec& y, const Ball& ball, double alpha) {
    const int n = x.size();
    if (y.size() != n || ball.center.size() != n)
        throw DomainError("green_function_alpha: dimension mismatch");
    const double r = ball.radius;
    const double dx = distance(x, ball.center);
    const double dy = distance(y, ball.center);
    if (dx >= r || dy >= r) return 0.0;
    const double dist = distance(x, y);
    if (dist == 0.0) return std::numeric_limits<double>::infinity();
    const double s = dist * dist / (r * r);
    const double t = (1.0 - dx * dx / (r * r)) * (1.0 - dy * dy / (r * r));
    return green_constant(n, alpha) * std::pow(dist, alpha - n) *
           incomplete_kernel_integral(t / s, alpha, n);
}

double poisson_kernel_alpha(const Vec& x, const Vec& y, const Ball& ball, double alpha) {
    const int n = x.size();
    if (y.size() != n || ball.center.size() != n)
        throw DomainError("poisson_kernel_alpha: dimension mismatch");
    const double r = ball.radius;
    const double dx = distance(x, ball.center);
    const double dy = distance(y, ball.center);
    if (!(dx < r)) throw DomainError("poisson_kernel_alpha: x must be interior");
    if (dy < r) return 0.0;
    if (dy == r) throw DomainError("poisson_kernel_alpha: y on the boundary sphere");
    const double ratio = (r * r - dx * dx) / (dy * dy - r * r);
    return poisson_constant(n, alpha) * std::pow(ratio, 0.5 * alpha) *
           std::pow(distance(x, y), -static_cast<double>(n));
}

double green_function_laplacian(const Vec& x, const Vec& y, const Ball& ball) {
    const int n = x.size();
    if (n < 3) throw DomainError("green_function_laplacian: requires n >= 3");
    if (ball.center.norm() != 0.0)
        throw DomainError("green_function_laplacian: ball must be centered at the origin");
    const double r = ball.radius;
    if (x.norm() >= r || y.norm() >= r) return 0.0;
    const double dist = distance(x, y);
    if (dist == 0.0) return std::numeric_limits<double>::infinity();
    // |x| |R x/|x|^2 - y/R| = sqrt(R^2 - 2 x.y + |x|^2 |y|^2 / R^2), smooth at x = 0.
    const double image = std::sqrt(r * r - 2.0 * dot(x, y) + x.norm_sq() * y.norm_sq() / (r * r));
    return riesz_constant(2.0, n) * (std::pow(dist, 2.0 - n) - std::pow(image, 2.0 - n));
}

namespace {

// Angular integral of g(y) / |x-y|^n over the sphere |y-c| = r, r > |x-c|,
// times r^{n-1}: the building block of the Poisson integral.
double poisson_shell_integral(const ScalarField& g, const Ball& ball, const Vec& x, double r,
                              const QuadConfig& cfg) {
    const int n = g.dim;
    const Vec& c = ball.center;
    if (n == 1) {
        Vec yp = c, ym = c;
        yp[0] += r;
        ym[0] -= r;
        return g.eval(yp) / std::abs(x[0] - yp[0]) + g.eval(ym) / std::abs(x[0] - ym[0]);
    }
    ScalarField product;
    product.dim = n;
    product.eval = [&g, &x, n](const Vec& y) {
        return g.eval(y) * std::pow(distance(x, y), -static_cast<double>(n));
    };
    const double d = distance(x, c);
    if (g.radial && distance(g.radial_center, c) == 0.0) {
        // Kernel mean and datum factorize on concentric spheres.
        return std::pow(r, n - 1.0) * unit_sphere_area(n) * g.profile(r) *
               sphere_kernel_average(d, r, static_cast<double>(n), n, cfg);
    }
    return std::pow(r, n - 1.0) * unit_sphere_area(n) *
           sphere_mean_general(product, c, r, cfg, 0);
}

} // namespace

double poisson_extension(const ScalarField& g, const Ball& ball, double alpha, const Vec& x,
                         const QuadConfig& cfg) {
    cfg.validate();
    const int n = g.dim;
    if (x.size() != n || ball.center.size() != n)
        throw DomainError("poisson_extension: dimension mismatch");
    const double r0 = ball.radius;
    const double d = distance(x, ball.center);
    if (!(d < r0)) throw DomainError("poisson_extension: x must be interior");
    if (!in_l_alpha(g, alpha)) throw DivergenceError("poisson_extension: datum not in L_alpha");

    // int_R^inf F(r) (r^2-R^2)^{-alpha/2} dr with F(r) = shell integral; the
    // substitution t = R^2/r^2 exposes both endpoint powers exactly.
    const QuadConfig inner = cfg.tightened(0.05);
    auto h = [&](double t) {
        const double r = r0 / std::sqrt(t);
        return 0.5 * std::pow(r0, 1.0 - alpha) / std::sqrt(t) *
               poisson_shell_integral(g, ball, x, r, inner);
    };

    std::vector<double> splits;
    for (double rb : average_break_radii(g, ball.center)) {
        if (rb > r0) {
            const double t = r0 * r0 / (rb * rb);
            if (t > 0.0 && t < 1.0) splits.push_back(t);
        }
    }
    const double integral =
        power_endpoints_split(h, 0.0, 1.0, 0.5 * alpha - 1.0, -0.5 * alpha, splits, cfg);
    return poisson_constant(n, alpha) * std::pow(r0 * r0 - d * d, 0.5 * alpha) * integral;
}

namespace {

double green_term(const ScalarField& v0, const Ball& ball, double alpha, const Vec& x,
                  const QuadConfig& cfg) {
    const int n = v0.dim;
    const double r0 = ball.radius;
    const Vec& c = ball.center;
    const double d = distance(x, c);
    const double kappa = green_constant(n, alpha);

    if (n == 1) {
        auto weight = [&](const Vec& y) {
            const double dist = distance(x, y);
            const double s = dist * dist / (r0 * r0);
            const double t = (1.0 - d * d / (r0 * r0)) *
                             (1.0 - (y - c).norm_sq() / (r0 * r0));
            return incomplete_kernel_integral(t / s, alpha, n);
        };
        auto at = [&](double yy) {
            Vec y(1);
            y[0] = yy;
            return y;
        };
        const double lo = c[0] - r0, hi = c[0] + r0;
        if (alpha < 1.0) {
            auto stripped = [&](double yy) {
                const Vec y = at(yy);
                return kappa * weight(y) * v0.eval(y);
            };
            return integrate_power_endpoints(stripped, lo, x[0], 0.0, alpha - 1.0, cfg) +
                   integrate_power_endpoints(stripped, x[0], hi, alpha - 1.0, 0.0, cfg);
        }
        auto full = [&](double yy) {
            const Vec y = at(yy);
            return green_function_alpha(x, y, ball, alpha) * v0.eval(y);
        };
        return integrate_adaptive(full, lo, x[0], cfg) + integrate_adaptive(full, x[0], hi, cfg);
    }

    const QuadConfig inner = cfg.tightened(0.05);
    if (d == 0.0) {
        // G(c, .) is radial: int_B G(c,y) v0 dy = kappa omega int_0^R r^{alpha-1} w(r) v0bar(r) dr
        // with the r^{alpha-1} power handed to the endpoint substitution.
        auto stripped = [&](double r) {
            const double w = incomplete_kernel_integral(r0 * r0 / (r * r) - 1.0, alpha, n);
            return w * spherical_average(v0, c, r, inner);
        };
        const std::vector<double> splits = average_break_radii(v0, c);
        return kappa * unit_sphere_area(n) *
               power_endpoints_split(stripped, 0.0, r0, alpha - 1.0, 0.0, splits, cfg);
    }

    if (n > 3 && !v0.radial)
        throw DomainError("green_poisson_reconstruct: off-center x needs n <= 3 or radial v0");

    ScalarField product;
    product.dim = n;
    product.eval = [&](const Vec& y) { return green_function_alpha(x, y, ball, alpha) * v0.eval(y); };
    auto shell = [&](double r) {
        return std::pow(r, n - 1.0) * sphere_mean_general(product, c, r, inner, 0);
    };
    std::vector<double> splits = average_break_radii(v0, c);
    splits.push_back(d); // sphere through x carries the kernel singularity
    return unit_sphere_area(n) * power_endpoints_split(shell, 0.0, r0, 0.0, 0.0, splits, cfg);
}

} // namespace

double green_poisson_reconstruct(const ScalarField& u, const ScalarField& v0, const Ball& ball,
                                 double alpha, const Vec& x, const QuadConfig& cfg) {
    cfg.validate();
    if (u.dim != v0.dim) throw DomainError("green_poisson_reconstruct: dimension mismatch");
    if (!ball.contains(x)) throw DomainError("green_poisson_reconstruct: x must be interior");
    if (!in_l_alpha(u, alpha))
        throw DivergenceError("green_poisson_reconstruct: u not in L_alpha");
    return green_term(v0, ball, alpha, x, cfg) + poisson_extension(u, ball, alpha, x, cfg);
}

double neg_radial_laplacian_fd(const std::function<double(double)>& v, double r, int n, double h) {
    if (!(r > 0.0) || !(h > 0.0) || r - h <= 0.0)
        throw DomainError("neg_radial_laplacian_fd: need 0 < h < r");
    auto lap = [&](double step) {
        const double vp = v(r + step), vm = v(r - step), v0 = v(r);
        const double d2 = (vp - 2.0 * v0 + vm) / (step * step);
        const double d1 = (vp - vm) / (2.0 * step);
        return d2 + (n - 1.0) * d1 / r;
    };
    const double coarse = lap(h);
    const double fine = lap(0.5 * h);
    return -(4.0 * fine - coarse) / 3.0;
}

std::vector<double> frac_laplacian_batch(const ScalarField& u, const std::vector<Vec>& pts,
                                         double alpha, const QuadConfig& cfg,
                                         parallel::Exec exec) {
    std::vector<double> out(pts.size(), 0.0);
    parallel::for_each_index(
        static_cast<std::int64_t>(pts.size()),
        [&](std::int64_t i) {
            out[static_cast<std::size_t>(i)] =
                frac_laplacian(u, pts[static_cast<std::size_t>(i)], alpha, cfg);
        },
        exec);
    return out;
}

std::vector<double> riesz_potential_batch(const ScalarField& f, double gamma,
                                          const std::vector<Vec>& pts, const QuadConfig& cfg,
                                          parallel::Exec exec) {
    std::vector<double> out(pts.size(), 0.0);
    parallel::for_each_index(
        static_cast<std::int64_t>(pts.size()),
        [&](std::int64_t i) {
            out[static_cast<std::size_t>(i)] =
                riesz_potential(f, gamma, pts[static_cast<std::size_t>(i)], cfg);
        },
        exec);
    return out;
}

} // namespace nlk
