#pragma once

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace hg {

/// Dimensions of H^n: n complex coordinates plus the center direction t.
/// The homogeneous dimension Q = 2n+2 governs all volume scaling.
struct GroupParams {
    int n = 1;

    GroupParams() = default;
    explicit GroupParams(int n_) : n(n_) {
        if (n < 1) throw std::invalid_argument("GroupParams: n must be >= 1");
    }

    int homogeneous_dimension() const { return 2 * n + 2; }
    int coord_count() const { return 2 * n + 1; }
};

/// A point (z, t) of H^n stored as 2n+1 reals: x_1..x_n, y_1..y_n, t.
struct GroupElement {
    std::vector<double> c;

    GroupElement() : c(3, 0.0) {}
    explicit GroupElement(const GroupParams& p) : c(p.coord_count(), 0.0) {}
    GroupElement(double x, double y, double t) : c{x, y, t} {}

    int dim_n() const { return static_cast<int>((c.size() - 1) / 2); }

    double x(int j) const { return c[j]; }
    double y(int j) const { return c[dim_n() + j]; }
    double t() const { return c.back(); }

    double& x(int j) { return c[j]; }
    double& y(int j) { return c[dim_n() + j]; }
    double& t() { return c.back(); }
};

/// Ball of the left-invariant homogeneous distance.
struct Ball {
    GroupElement center;
    double radius = 1.0;

    Ball() = default;
    Ball(GroupElement c0, double r) : center(std::move(c0)), radius(r) {
        if (!(radius > 0.0) || !std::isfinite(radius))
            throw std::invalid_argument("Ball: radius must be positive and finite");
    }
};

inline GroupElement identity(const GroupParams& p) { return GroupElement(p); }

inline void check_same_dim(const GroupElement& u, const GroupElement& v) {
    if (u.c.size() != v.c.size())
        throw std::invalid_argument("group operation: dimension mismatch");
}

/// Im(z . conj(z')) = sum_j (y_j x'_j - x_j y'_j), the symplectic form in the group law.
inline double symplectic_form(const GroupElement& u, const GroupElement& v) {
    const int n = u.dim_n();
    double s = 0.0;
    for (int j = 0; j < n; ++j) s += u.y(j) * v.x(j) - u.x(j) * v.y(j);
    return s;
}

/// Group law (z,t)(z',t') = (z+z', t+t'+2 Im(z.conj(z'))).
inline GroupElement multiply(const GroupElement& u, const GroupElement& v) {
    check_same_dim(u, v);
    const int n = u.dim_n();
    GroupElement w = u;
    for (int j = 0; j < n; ++j) {
        w.x(j) += v.x(j);
        w.y(j) += v.y(j);
    }
    w.t() = u.t() + v.t() + 2.0 * symplectic_form(u, v);
    return w;
}

inline GroupElement inverse(const GroupElement& u) {
    GroupElement w = u;
    for (auto& a : w.c) a = -a;
    return w;
}

/// delta_a(z,t) = (a z, a^2 t), a > 0.
inline GroupElement dilate(double a, const GroupElement& u) {
    if (!(a > 0.0)) throw std::invalid_argument("dilate: factor must be positive");
    const int n = u.dim_n();
    GroupElement w = u;
    for (int j = 0; j < n; ++j) {
        w.x(j) *= a;
        w.y(j) *= a;
    }
    w.t() *= a * a;
    return w;
}

inline double z_norm_sq(const GroupElement& u) {
    const int n = u.dim_n();
    double s = 0.0;
    for (int j = 0; j < n; ++j) s += u.x(j) * u.x(j) + u.y(j) * u.y(j);
    return s;
}

/// Homogeneous norm |(z,t)| = (|z|^4 + t^2)^{1/4}.
inline double koranyi_norm(const GroupElement& u) {
    const double zz = z_norm_sq(u);
    return std::pow(zz * zz + u.t() * u.t(), 0.25);
}

/// d(u,v) = |u^{-1} v|; left-invariant, symmetric since |w^{-1}| = |w|.
inline double distance(const GroupElement& u, const GroupElement& v) {
    check_same_dim(u, v);
    return koranyi_norm(multiply(inverse(u), v));
}

/// Lebesgue measure of {|z|^4 + t^2 < 1} in R^{2n+1}:
///   pi^n Gamma(n/2) Gamma(3/2) / (Gamma(n) Gamma((n+3)/2)).
/// A formula appearing in parts of the literature is exactly twice this value;
/// see unit_ball_volume_variant_2x below. All norms here divide by Lebesgue
/// measures, so the measured constant is the consistent choice.
inline double unit_ball_volume(const GroupParams& p) {
    const double n = p.n;
    const double lg = n * std::log(M_PI) + std::lgamma(n / 2.0) + std::lgamma(1.5) -
                      std::lgamma(n) - std::lgamma((n + 3.0) / 2.0);
    return std::exp(lg);
}

/// The 2x constant quoted in some references; kept for comparison and flagged
/// in reports. Equals 2 * unit_ball_volume for every n.
inline double unit_ball_volume_variant_2x(const GroupParams& p) {
    const double n = p.n;
    const double lg = std::log(2.0) + (n + 0.5) * std::log(M_PI) + std::lgamma(n / 2.0) -
                      std::log(n + 1.0) - std::lgamma(n) - std::lgamma((n + 1.0) / 2.0);
    return std::exp(lg);
}

/// |B(u,r)| = r^Q |B(0,1)|, independent of the center.
inline double ball_volume(const Ball& b) {
    GroupParams p(b.center.dim_n());
    return std::pow(b.radius, p.homogeneous_dimension()) * unit_ball_volume(p);
}

}  // namespace hg
