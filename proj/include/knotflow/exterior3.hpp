#pragma once

// Pointwise exterior calculus on Euclidean 3-space: flat/sharp, Hodge star,
// finite-difference exterior derivative, curl, and the residuals of the
// force-free (curl v = kappa v) and Helmholtz equations.

#include <array>
#include <cmath>
#include <functional>
#include <stdexcept>

namespace knotflow {

using Vec3 = std::array<double, 3>;
using ScalarField3 = std::function<double(const Vec3&)>;

struct FieldR3 {
    std::function<Vec3(const Vec3&)> eval;

    static FieldR3 from_components(ScalarField3 v1, ScalarField3 v2, ScalarField3 v3) {
        return {[v1 = std::move(v1), v2 = std::move(v2), v3 = std::move(v3)](const Vec3& p) {
            return Vec3{v1(p), v2(p), v3(p)};
        }};
    }

    static FieldR3 constant(Vec3 c) {
        return {[c](const Vec3&) { return c; }};
    }
};

// curl-eigenfield with eigenvalue 1 when A = B = C = 1
inline FieldR3 abc_flow(double A = 1.0, double B = 1.0, double C = 1.0) {
    return {[A, B, C](const Vec3& p) {
        return Vec3{A * std::sin(p[2]) + C * std::cos(p[1]),
                    B * std::sin(p[0]) + A * std::cos(p[2]),
                    C * std::sin(p[1]) + B * std::cos(p[0])};
    }};
}

struct OneForm3 {
    std::array<double, 3> a{};  // a1 dx1 + a2 dx2 + a3 dx3
};

struct TwoForm3 {
    std::array<double, 3> b{};  // b12 dx1^dx2 + b31 dx3^dx1 + b23 dx2^dx3
};

namespace detail {

inline void require_finite(const Vec3& v) {
    for (double c : v)
        if (!std::isfinite(c)) throw std::domain_error("non-finite field evaluation");
}

inline void require_step(double h) {
    if (!(h > 0)) throw std::invalid_argument("finite-difference step must be positive");
}

}  // namespace detail

inline OneForm3 flat(const FieldR3& v, const Vec3& p) {
    const Vec3 val = v.eval(p);
    detail::require_finite(val);
    return {val};
}

inline Vec3 sharp(const OneForm3& a) { return a.a; }

// * dx1 = dx2^dx3, * dx2 = dx3^dx1, * dx3 = dx1^dx2
inline TwoForm3 hodge(const OneForm3& a) { return {{a.a[2], a.a[1], a.a[0]}}; }

// * (dx1^dx2) = dx3, * (dx3^dx1) = dx2, * (dx2^dx3) = dx1
inline OneForm3 hodge(const TwoForm3& b) { return {{b.b[2], b.b[1], b.b[0]}}; }

// exterior derivative of flat(v), coefficients by central differences
inline TwoForm3 d_flat(const FieldR3& v, const Vec3& p, double h) {
    detail::require_step(h);
    std::array<Vec3, 3> plus, minus;
    for (int d = 0; d < 3; ++d) {
        Vec3 pp = p, pm = p;
        pp[static_cast<std::size_t>(d)] += h;
        pm[static_cast<std::size_t>(d)] -= h;
        plus[static_cast<std::size_t>(d)] = v.eval(pp);
        minus[static_cast<std::size_t>(d)] = v.eval(pm);
        detail::require_finite(plus[static_cast<std::size_t>(d)]);
        detail::require_finite(minus[static_cast<std::size_t>(d)]);
    }
    auto partial = [&](int dir, int comp) {
        return (plus[static_cast<std::size_t>(dir)][static_cast<std::size_t>(comp)] -
                minus[static_cast<std::size_t>(dir)][static_cast<std::size_t>(comp)]) /
               (2.0 * h);
    };
    return {{partial(0, 1) - partial(1, 0),    // d1 A2 - d2 A1
             partial(2, 0) - partial(0, 2),    // d3 A1 - d1 A3
             partial(1, 2) - partial(2, 1)}};  // d2 A3 - d3 A2
}

// sharp(*d(flat v)): central differences of step h, O(h^2) accurate
inline Vec3 curl(const FieldR3& v, const Vec3& p, double h = 1e-5) {
    return sharp(hodge(d_flat(v, p, h)));
}

// curl v - kappa v
inline Vec3 beltrami_residual(const FieldR3& v, double kappa, const Vec3& p, double h = 1e-5) {
    const Vec3 c = curl(v, p, h);
    const Vec3 val = v.eval(p);
    detail::require_finite(val);
    return {c[0] - kappa * val[0], c[1] - kappa * val[1], c[2] - kappa * val[2]};
}

inline Vec3 laplacian(const FieldR3& v, const Vec3& p, double h) {
    detail::require_step(h);
    const Vec3 center = v.eval(p);
    detail::require_finite(center);
    Vec3 out{0, 0, 0};
    for (int d = 0; d < 3; ++d) {
        Vec3 pp = p, pm = p;
        pp[static_cast<std::size_t>(d)] += h;
        pm[static_cast<std::size_t>(d)] -= h;
        const Vec3 vp = v.eval(pp), vm = v.eval(pm);
        detail::require_finite(vp);
        detail::require_finite(vm);
        for (int c = 0; c < 3; ++c)
            out[static_cast<std::size_t>(c)] +=
                (vp[static_cast<std::size_t>(c)] - 2.0 * center[static_cast<std::size_t>(c)] +
                 vm[static_cast<std::size_t>(c)]) / (h * h);
    }
    return out;
}

// grad^2 v + kappa^2 v; vanishes for every constant-kappa force-free field
inline Vec3 helmholtz_residual(const FieldR3& v, double kappa, const Vec3& p, double h = 1e-4) {
    const Vec3 lap = laplacian(v, p, h);
    const Vec3 val = v.eval(p);
    return {lap[0] + kappa * kappa * val[0], lap[1] + kappa * kappa * val[1],
            lap[2] + kappa * kappa * val[2]};
}

inline double divergence(const FieldR3& v, const Vec3& p, double h = 1e-5) {
    detail::require_step(h);
    double s = 0;
    for (int d = 0; d < 3; ++d) {
        Vec3 pp = p, pm = p;
        pp[static_cast<std::size_t>(d)] += h;
        pm[static_cast<std::size_t>(d)] -= h;
        const Vec3 vp = v.eval(pp), vm = v.eval(pm);
        detail::require_finite(vp);
        detail::require_finite(vm);
        s += (vp[static_cast<std::size_t>(d)] - vm[static_cast<std::size_t>(d)]) / (2.0 * h);
    }
    return s;
}

inline Vec3 gradient(const ScalarField3& f, const Vec3& p, double h = 1e-5) {
    detail::require_step(h);
    Vec3 g{};
    for (int d = 0; d < 3; ++d) {
        Vec3 pp = p, pm = p;
        pp[static_cast<std::size_t>(d)] += h;
        pm[static_cast<std::size_t>(d)] -= h;
        g[static_cast<std::size_t>(d)] = (f(pp) - f(pm)) / (2.0 * h);
    }
    return g;
}

struct MaxwellDecomposition {
    Vec3 E{};
    Vec3 B{};
    double div_v = 0;         // source-free requirement
    double v_dot_grad_f = 0;  // phase transversality requirement
};

// E = v cos f, B = v sin f, with the two scalar residuals that make the pair
// solve the source-free Maxwell system.
inline MaxwellDecomposition maxwell_decomposition(const FieldR3& v, const ScalarField3& f,
                                                  const Vec3& p, double h = 1e-5) {
    const Vec3 val = v.eval(p);
    detail::require_finite(val);
    const double phase = f(p);
    if (!std::isfinite(phase)) throw std::domain_error("non-finite phase evaluation");
    MaxwellDecomposition out;
    const double cs = std::cos(phase), sn = std::sin(phase);
    for (int c = 0; c < 3; ++c) {
        out.E[static_cast<std::size_t>(c)] = val[static_cast<std::size_t>(c)] * cs;
        out.B[static_cast<std::size_t>(c)] = val[static_cast<std::size_t>(c)] * sn;
    }
    out.div_v = divergence(v, p, h);
    const Vec3 g = gradient(f, p, h);
    out.v_dot_grad_f = val[0] * g[0] + val[1] * g[1] + val[2] * g[2];
    return out;
}

}  // namespace knotflow
