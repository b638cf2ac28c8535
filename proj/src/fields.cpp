#include "nlk/fields.hpp"

#include <algorithm>
#include <cmath>

#include "nlk/parallel.hpp"

namespace nlk {

ScalarField constant_field(int n, double c) {
    ScalarField u;
    u.dim = n;
    u.eval = [c](const Vec&) { return c; };
    u.decay_exponent = 0.0;
    u.smoothness_radius = 1e30;
    u.radial = true;
    u.radial_center = zero_vec(n);
    u.profile = [c](double) { return c; };
    return u;
}

ScalarField cosine_field(const Vec& k, double phase) {
    ScalarField u;
    u.dim = k.size();
    u.eval = [k, phase](const Vec& x) { return std::cos(dot(k, x) + phase); };
    u.decay_exponent = 0.0;
    u.smoothness_radius = 1e30;
    return u;
}

ScalarField gaussian_field(const Vec& center, double width) {
    if (!(width > 0.0)) throw DomainError("gaussian_field: width must be positive");
    ScalarField u;
    u.dim = center.size();
    const double inv_w2 = 1.0 / (width * width);
    u.eval = [center, inv_w2](const Vec& x) { return std::exp(-(x - center).norm_sq() * inv_w2); };
    u.decay_exponent = 50.0; // super-polynomial; any polynomial bound holds
    u.smoothness_radius = 1e30;
    u.radial = true;
    u.radial_center = center;
    u.profile = [inv_w2](double r) { return std::exp(-r * r * inv_w2); };
    return u;
}

ScalarField bump_field(int n) {
    ScalarField u;
    u.dim = n;
    auto prof = [](double r) {
        const double t = 1.0 - r * r;
        return t > 0.0 ? t * t * t : 0.0;
    };
    u.eval = [prof](const Vec& x) { return prof(x.norm()); };
    u.decay_exponent = 1e9; // compact support
    u.smoothness_radius = 0.5;
    u.radial = true;
    u.radial_center = zero_vec(n);
    u.profile = prof;
    u.profile_breaks = {1.0};
    return u;
}

ScalarField ball_indicator_field(int n, double radius) {
    if (!(radius > 0.0)) throw DomainError("ball_indicator_field: radius must be positive");
    ScalarField u;
    u.dim = n;
    auto prof = [radius](double r) { return r < radius ? 1.0 : 0.0; };
    u.eval = [prof](const Vec& x) { return prof(x.norm()); };
    u.decay_exponent = 1e9;
    u.smoothness_radius = 0.0;
    u.radial = true;
    u.radial_center = zero_vec(n);
    u.profile = prof;
    u.profile_breaks = {radius};
    return u;
}

ScalarField radial_field(int n, Vec center, std::function<double(double)> profile,
                         double decay_exponent, double smoothness_radius) {
    ScalarField u;
    u.dim = n;
    u.radial = true;
    u.radial_center = center;
    u.profile = profile;
    u.decay_exponent = decay_exponent;
    u.smoothness_radius = smoothness_radius;
    u.eval = [center, profile](const Vec& x) { return profile((x - center).norm()); };
    return u;
}

CubicSpline::CubicSpline(std::vector<double> x, std::vector<double> y)
    : x_(std::move(x)), y_(std::move(y)) {
    const std::size_t n = x_.size();
    if (n < 3 || y_.size() != n) throw DomainError("CubicSpline: need >= 3 increasing nodes");
    for (std::size_t i = 1; i < n; ++i)
        if (!(x_[i] > x_[i - 1])) throw DomainError("CubicSpline: abscissae must be strictly increasing");

    // Natural spline: tridiagonal solve for second derivatives.
    m_.assign(n, 0.0);
    std::vector<double> diag(n, 0.0), rhs(n, 0.0), sub(n, 0.0);
    for (std::size_t i = 1; i + 1 < n; ++i) {
        const double h0 = x_[i] - x_[i - 1];
        const double h1 = x_[i + 1] - x_[i];
        sub[i] = h0;
        diag[i] = 2.0 * (h0 + h1);
        rhs[i] = 6.0 * ((y_[i + 1] - y_[i]) / h1 - (y_[i] - y_[i - 1]) / h0);
    }
    // Forward elimination over interior rows.
    for (std::size_t i = 2; i + 1 < n; ++i) {
        const double w = sub[i] / diag[i - 1];
        diag[i] -= w * (x_[i] - x_[i - 1]);
        rhs[i] -= w * rhs[i - 1];
    }
    for (std::size_t i = n - 2; i >= 1; --i) {
        const double upper = x_[i + 1] - x_[i];
        m_[i] = (rhs[i] - (i + 1 < n - 1 ? upper * m_[i + 1] : 0.0)) / diag[i];
        if (i == 1) break;
    }
}

double CubicSpline::operator()(double x) const {
    const std::size_t n = x_.size();
    if (x <= x_.front()) x = x_.front();
    if (x >= x_.back()) x = x_.back();
    const auto it = std::upper_bound(x_.begin(), x_.end(), x);
    std::size_t i = static_cast<std::size_t>(std::max<std::ptrdiff_t>(1, it - x_.begin())) - 1;
    if (i > n - 2) i = n - 2;
    const double h = x_[i + 1] - x_[i];
    const double t = (x - x_[i]) / h;
    const double a = 1.0 - t;
    return a * y_[i] + t * y_[i + 1] +
           h * h / 6.0 * ((a * a * a - a) * m_[i] + (t * t * t - t) * m_[i + 1]);
}

ScalarField tabulated_radial_field(int n, const Vec& center,
                                   const std::function<double(double)>& profile,
                                   double r_max, int samples, double tail_exponent,
                                   std::vector<double> breaks) {
    if (!(r_max > 0.0)) throw DomainError("tabulated_radial_field: r_max must be positive");
    if (samples < 8) throw DomainError("tabulated_radial_field: need at least 8 samples");

    // One spline per smooth segment; Chebyshev-extrema nodes cluster toward
    // the segment ends where profiles tend to steepen.
    std::vector<double> cuts{0.0};
    for (double b : breaks)
        if (b > 0.0 && b < r_max) cuts.push_back(b);
    cuts.push_back(r_max);
    std::sort(cuts.begin(), cuts.end());

    struct Segment {
        double lo, hi;
        CubicSpline spline;
    };
    auto segments = std::make_shared<std::vector<Segment>>();

    for (std::size_t s = 0; s + 1 < cuts.size(); ++s) {
        const double lo = cuts[s], hi = cuts[s + 1];
        const int ns = std::max(12, static_cast<int>(samples * (hi - lo) / r_max));
        std::vector<double> xs(static_cast<std::size_t>(ns)), ys(static_cast<std::size_t>(ns));
        for (int j = 0; j < ns; ++j) {
            const double t = std::cos(M_PI * (ns - 1 - j) / (ns - 1)); // -1 .. 1
            xs[static_cast<std::size_t>(j)] = 0.5 * (lo + hi) + 0.5 * (hi - lo) * t;
        }
        xs.front() = lo;
        xs.back() = hi;
        parallel::for_each_index(ns, [&](std::int64_t j) {
            ys[static_cast<std::size_t>(j)] = profile(xs[static_cast<std::size_t>(j)]);
        });
        segments->push_back(Segment{lo, hi, CubicSpline(xs, ys)});
    }

    const double y_edge = (*segments).back().spline(r_max);
    auto table_profile = [segments, r_max, y_edge, tail_exponent](double r) {
        if (r >= r_max) return y_edge * std::pow(r / r_max, -tail_exponent);
        for (const auto& seg : *segments)
            if (r <= seg.hi) return seg.spline(r);
        return (*segments).back().spline(r);
    };

    ScalarField u = radial_field(n, center, table_profile, tail_exponent);
    u.profile_breaks = breaks;
    u.profile_breaks.push_back(r_max);
    return u;
}

bool in_l_alpha(const ScalarField& u, double alpha) {
    (void)alpha; // the weight 1/(1+|x|^{n+alpha}) integrates any bounded field
    return u.decay_exponent >= 0.0;
}

void validate_decay(const ScalarField& u, double r_max) {
    const int n = u.dim;
    const double q = u.decay_exponent;
    std::vector<Vec> rays;
    rays.push_back(basis_vec(n, 0));
    rays.push_back(-1.0 * basis_vec(n, 0));
    if (n > 1) {
        Vec diag(n);
        for (int i = 0; i < n; ++i) diag[i] = 1.0 / std::sqrt(static_cast<double>(n));
        rays.push_back(diag);
    }

    double scale = 0.0;
    for (const Vec& d : rays)
        for (double r : {0.5, 1.0, 2.0, 4.0})
            scale = std::max(scale, std::abs(u.eval(r * d)) * std::pow(1.0 + r, q));
    scale = std::max(scale, 1e-300);

    for (const Vec& d : rays) {
        for (double r = 8.0; r <= r_max; r *= 2.0) {
            const double bound = 50.0 * scale * std::pow(1.0 + r, -q);
            if (std::abs(u.eval(r * d)) > bound + 1e-14)
                throw FieldContractError("validate_decay: sampled values exceed the declared decay");
        }
    }
}

namespace {

// Acklam's rational approximation to the inverse normal CDF (~1.15e-9 rel).
double inv_normal_cdf(double p) {
    static const double a[6] = {-3.969683028665376e+01, 2.209460984245205e+02,
                                -2.759285104469687e+02, 1.383577518672690e+02,
                                -3.066479806614716e+01, 2.506628277459239e+00};
    static const double b[5] = {-5.447609879822406e+01, 1.615858368580409e+02,
                                -1.556989798598866e+02, 6.680131188771972e+01,
                                -1.328068155288572e+01};
    static const double c[6] = {-7.784894002430293e-03, -3.223964580411365e-01,
                                -2.400758277161838e+00, -2.549732539343734e+00,
                                4.374664141464968e+00,  2.938163982698783e+00};
    static const double d[4] = {7.784695709041462e-03, 3.224671290700398e-01,
                                2.445134137142996e+00, 3.754408661907416e+00};
    const double plow = 0.02425;
    if (p < plow) {
        const double r = std::sqrt(-2.0 * std::log(p));
        return (((((c[0] * r + c[1]) * r + c[2]) * r + c[3]) * r + c[4]) * r + c[5]) /
               ((((d[0] * r + d[1]) * r + d[2]) * r + d[3]) * r + 1.0);
    }
    if (p > 1.0 - plow) {
        const double r = std::sqrt(-2.0 * std::log(1.0 - p));
        return -(((((c[0] * r + c[1]) * r + c[2]) * r + c[3]) * r + c[4]) * r + c[5]) /
               ((((d[0] * r + d[1]) * r + d[2]) * r + d[3]) * r + 1.0);
    }
    const double r = p - 0.5;
    const double s = r * r;
    return (((((a[0] * s + a[1]) * s + a[2]) * s + a[3]) * s + a[4]) * s + a[5]) * r /
           (((((b[0] * s + b[1]) * s + b[2]) * s + b[3]) * s + b[4]) * s + 1.0);
}

double halton(std::uint64_t index, int base) {
    double f = 1.0, r = 0.0;
    while (index > 0) {
        f /= base;
        r += f * static_cast<double>(index % static_cast<std::uint64_t>(base));
        index /= static_cast<std::uint64_t>(base);
    }
    return r;
}

double splitmix_unit(std::uint64_t& state) {
    state += 0x9E3779B97f4A7C15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    z = z ^ (z >> 31);
    return static_cast<double>(z >> 11) * 0x1.0p-53;
}

} // namespace

std::vector<Vec> sphere_point_set(int n, int count, std::uint64_t seed) {
    if (n < 1 || n > Vec::kMaxDim) throw DomainError("sphere_point_set: unsupported dimension");
    if (count < 1) throw DomainError("sphere_point_set: count must be positive");
    static const int primes[8] = {2, 3, 5, 7, 11, 13, 17, 19};

    std::vector<double> shift(static_cast<std::size_t>(n), 0.0);
    if (seed != 0) {
        std::uint64_t state = seed;
        for (int d = 0; d < n; ++d) shift[static_cast<std::size_t>(d)] = splitmix_unit(state);
    }

    std::vector<Vec> pts;
    pts.reserve(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i) {
        Vec z(n);
        double norm_sq = 0.0;
        for (int d = 0; d < n; ++d) {
            double u = halton(static_cast<std::uint64_t>(i + 1), primes[d]) + shift[static_cast<std::size_t>(d)];
            u -= std::floor(u);
            u = std::min(std::max(u, 1e-12), 1.0 - 1e-12);
            z[d] = inv_normal_cdf(u);
            norm_sq += z[d] * z[d];
        }
        if (norm_sq == 0.0) {
            z[0] = 1.0;
            norm_sq = 1.0;
        }
        pts.push_back((1.0 / std::sqrt(norm_sq)) * z);
    }
    return pts;
}

} // namespace nlk
