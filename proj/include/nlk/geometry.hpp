#pragma once

#include <algorithm>
#include <array>
#include <cassert>
#include <cmath>
#include <cstddef>
#include <initializer_list>

#include "nlk/errors.hpp"

namespace nlk {

/// Small fixed-capacity point in R^n. The toolkit works at desk scale
/// (n <= 8), so inline storage avoids per-evaluation allocations in the
/// quadrature-driven inner loops.
class Vec {
public:
    static constexpr int kMaxDim = 8;

    Vec() : size_(0) { data_.fill(0.0); }
    explicit Vec(int n) : size_(n) {
        assert(n >= 0 && n <= kMaxDim);
        data_.fill(0.0);
    }
    Vec(std::initializer_list<double> xs) : size_(static_cast<int>(xs.size())) {
        assert(size_ <= kMaxDim);
        data_.fill(0.0);
        std::copy(xs.begin(), xs.end(), data_.begin());
    }

    int size() const { return size_; }
    double operator[](int i) const { return data_[static_cast<std::size_t>(i)]; }
    double& operator[](int i) { return data_[static_cast<std::size_t>(i)]; }

    double norm_sq() const {
        double s = 0.0;
        for (int i = 0; i < size_; ++i) s += data_[static_cast<std::size_t>(i)] * data_[static_cast<std::size_t>(i)];
        return s;
    }
    double norm() const { return std::sqrt(norm_sq()); }

    const double* data() const { return data_.data(); }

private:
    std::array<double, kMaxDim> data_;
    int size_;
};

inline Vec operator+(const Vec& a, const Vec& b) {
    assert(a.size() == b.size());
    Vec r(a.size());
    for (int i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

inline Vec operator-(const Vec& a, const Vec& b) {
    assert(a.size() == b.size());
    Vec r(a.size());
    for (int i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

inline Vec operator*(double c, const Vec& a) {
    Vec r(a.size());
    for (int i = 0; i < a.size(); ++i) r[i] = c * a[i];
    return r;
}

inline double dot(const Vec& a, const Vec& b) {
    assert(a.size() == b.size());
    double s = 0.0;
    for (int i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline double distance(const Vec& a, const Vec& b) { return (a - b).norm(); }

/// i-th standard basis vector in R^n.
inline Vec basis_vec(int n, int i) {
    Vec e(n);
    e[i] = 1.0;
    return e;
}

inline Vec zero_vec(int n) { return Vec(n); }

/// Open ball: the domain of the Green and Poisson kernels.
struct Ball {
    Vec center;
    double radius = 1.0;

    Ball() = default;
    Ball(Vec c, double r) : center(std::move(c)), radius(r) {
        if (!(radius > 0.0)) throw DomainError("Ball: radius must be positive");
    }

    bool contains(const Vec& x) const { return distance(x, center) < radius; }
};

/// Surface area of the unit sphere S^{n-1} in R^n.
double unit_sphere_area(int n);

} // namespace nlk
