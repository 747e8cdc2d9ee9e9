// The concrete three-dimensional (pseudo)Euclidean geometry: the solved
// coefficient fields A, B, C of the invariant third-order equation, the
// equation itself, its two contact Lagrangians, the homogeneous
// counterparts on the velocity space, and the invariant momentum.
//
// Index conventions. The plane star uses eps_12 = orientation, and the
// residuals are covariant 2-vectors, so the leading term of the invariant
// equation is A.v'' with A_ij = eps_ij (1+V.V)^{-3/2} (the printed minus
// sign of the star term is absorbed here).  On the velocity space the
// homogeneous residual is fixed as the image of the contact residual under
// the quotient relation eps = (-u^i E_i, u^0 E_i); equivalently it is the
// total derivative of the invariant momentum.  This choice flips the
// overall sign of the displayed homogeneous equation but keeps every
// cross-identity exact.
#pragma once

#include <cmath>
#include <vector>

#include "affine.hpp"
#include "euler_poisson.hpp"
#include "fields.hpp"
#include "metric.hpp"

namespace varjet {

namespace detail {
template <class T>
Vec2<T> v2(const std::vector<T>& xs) {
    return {xs[0], xs[1]};
}
template <class T>
Vec3<T> v3(const std::vector<T>& xs) {
    return {xs[0], xs[1], xs[2]};
}
template <class T>
T one_plus_vv(const Vec2<T>& v, const MetricConfig& m) {
    T w = 1.0 + sdot(v, v, m);
    if (lead(w) <= 0.0) throw DomainError("1 + V.V <= 0");
    return w;
}
} // namespace detail

// --- coefficient fields of the invariant equation ---------------------------

struct InvariantA {
    MetricConfig m;

    template <class T>
    Mat2<T> operator()(const JetVals<T>& p) const {
        Vec2<T> v = detail::v2(p.v[0]);
        T a = pow_real(detail::one_plus_vv(v, m), -1.5) * double(m.orientation);
        Mat2<T> out;
        out[0][0] = T{};
        out[1][1] = T{};
        out[0][1] = a;
        out[1][0] = -a;
        return out;
    }
};

struct InvariantB {
    MetricConfig m;
    GeometryParams gp;

    template <class T>
    Mat2<T> operator()(const JetVals<T>& p) const {
        Vec2<T> v = detail::v2(p.v[0]);
        T w = detail::one_plus_vv(v, m);
        T f = pow_real(w, -1.5) * (-gp.mu);
        Vec2<T> vl = lower2(v, m);
        Mat2<T> out;
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) {
                double gij = (i == j) ? m.g_spatial(i) : 0.0;
                out[i][j] = f * (vl[i] * vl[j] - w * gij);
            }
        return out;
    }
};

struct InvariantC {
    template <class T>
    Vec2<T> operator()(const JetVals<T>&) const {
        return {T{}, T{}};
    }
};

inline auto invariant_abc(const MetricConfig& m, const GeometryParams& gp) {
    return affine_third_order(InvariantA{m}, InvariantB{m, gp}, InvariantC{});
}

// Negative controls for the verification drivers.
struct SymmetrizedA {
    MetricConfig m;

    template <class T>
    Mat2<T> operator()(const JetVals<T>& p) const {
        Vec2<T> v = detail::v2(p.v[0]);
        T a = pow_real(detail::one_plus_vv(v, m), -1.5) * double(m.orientation);
        Mat2<T> out;
        out[0][0] = T{};
        out[1][1] = T{};
        out[0][1] = a;
        out[1][0] = a;
        return out;
    }
};

inline auto symmetrized_abc(const MetricConfig& m, const GeometryParams& gp) {
    return affine_third_order(SymmetrizedA{m}, InvariantB{m, gp}, InvariantC{});
}

template <class FB>
struct PerturbedB {
    FB base;
    Mat2<double> n;

    template <class T>
    Mat2<T> operator()(const JetVals<T>& p) const {
        Mat2<T> out = base(p);
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) out[i][j] = out[i][j] + n[i][j];
        return out;
    }
};

inline auto b_perturbed_abc(const MetricConfig& m, const GeometryParams& gp,
                            const Mat2<double>& n) {
    return affine_third_order(InvariantA{m}, PerturbedB<InvariantB>{InvariantB{m, gp}, n},
                              InvariantC{});
}

struct ConstantC {
    Vec2<double> c0;

    template <class T>
    Vec2<T> operator()(const JetVals<T>&) const {
        return {T(c0[0]), T(c0[1])};
    }
};

inline auto c_constant_abc(const MetricConfig& m, const GeometryParams& gp,
                           const Vec2<double>& c0) {
    return affine_third_order(InvariantA{m}, InvariantB{m, gp}, ConstantC{c0});
}

// --- the invariant equation in closed form ----------------------------------

template <class T>
std::vector<T> ep20_values(const JetVals<T>& p, const MetricConfig& m,
                           const GeometryParams& gp) {
    Vec2<T> v = detail::v2(p.v[0]);
    Vec2<T> vp = detail::v2(p.v[1]);
    Vec2<T> vpp = detail::v2(p.v[2]);
    T w = detail::one_plus_vv(v, m);
    T w32 = pow_real(w, 1.5);
    T w52 = w32 * w;
    T vdvp = sdot(v, vp, m);
    Vec2<T> sv2 = hodge_star(vpp, m);
    Vec2<T> sv1 = hodge_star(vp, m);
    Vec2<T> vl = lower2(v, m);
    Vec2<T> vpl = lower2(vp, m);
    std::vector<T> e(2);
    for (int i = 0; i < 2; ++i)
        e[i] = -sv2[i] / w32 + 3.0 * sv1[i] * vdvp / w52 +
               gp.mu * (w * vpl[i] - vdvp * vl[i]) / w32;
    return e;
}

inline std::vector<double> ep_residual(const ContactJet& j, const MetricConfig& m,
                                       const GeometryParams& gp) {
    if (j.order < 3) throw OrderExceeded("ep_residual: jet order below 3");
    return ep20_values(values_of(j), m, gp);
}

inline auto ep_source_form(const MetricConfig& m, const GeometryParams& gp) {
    return make_source_form(3, 2, [m, gp](const auto& p) { return ep20_values(p, m, gp); });
}

// --- the two contact Lagrangians --------------------------------------------

// L_(j), j in {1, 2}; both produce the invariant equation, differing by a
// total derivative.
template <class T>
T contact_lagrangian_value(int jdx, const JetVals<T>& p, const MetricConfig& m,
                           const GeometryParams& gp) {
    Vec2<T> v = detail::v2(p.v[0]);
    Vec2<T> vp = detail::v2(p.v[1]);
    T w = detail::one_plus_vv(v, m);
    Vec2<T> ej{T{}, T{}};
    ej[jdx - 1] = T(1.0);
    T swedge = star_wedge(vp, ej, m);
    double gjj = m.g_spatial(jdx - 1);
    T denom = 1.0 + sdot(v, v, m) - gjj * v[jdx - 1] * v[jdx - 1];
    if (std::abs(lead(denom)) < 1e-12) throw DenominatorZero("contact_lagrangian: 1 + g_jj |V ^ e_j|^2 = 0");
    return swedge * v[jdx - 1] / (sqrt(w) * denom) - gp.mu * sqrt(w);
}

inline double contact_lagrangian(int jdx, const ContactJet& j, const MetricConfig& m,
                                 const GeometryParams& gp) {
    return contact_lagrangian_value(jdx, values_of(j), m, gp);
}

inline auto contact_lagrangian_field(int jdx, const MetricConfig& m, const GeometryParams& gp) {
    return make_scalar_field(2, 2, false, [jdx, m, gp](const auto& p) {
        return contact_lagrangian_value(jdx, p, m, gp);
    });
}

// The gauge function whose total derivative separates the two Lagrangians:
// arctan(v^1 v^2 / sqrt(1 + v_j v^j)).  The star inside both Lagrangians
// carries the orientation sign, so the gauge function does too.
inline auto lagrangian_gauge_field(const MetricConfig& m) {
    return make_scalar_field(1, 2, false, [m](const auto& p) {
        auto v = detail::v2(p.v[0]);
        auto w = detail::one_plus_vv(v, m);
        return double(m.orientation) * atan(v[0] * v[1] / sqrt(w));
    });
}

// --- homogeneous counterparts on the velocity space -------------------------

// Residual of the homogeneous equation at (u, udot, uddot), covariant.
// Sign convention: this equals both homogenize_source of the contact
// residual and D_t of the invariant momentum.
inline std::vector<double> homogeneous_residual(const Vec3<double>& u, const Vec3<double>& ud,
                                                const Vec3<double>& udd, const MetricConfig& m,
                                                const GeometryParams& gp) {
    double uu = dot3(u, u, m);
    if (uu <= 0.0) throw NullVelocity("homogeneous_residual: |u|^2 <= 0");
    double nu = std::sqrt(uu);
    double n3 = nu * uu;
    double n5 = n3 * uu;
    Vec3<double> c2 = cross3(udd, u, m);
    Vec3<double> c1 = cross3(ud, u, m);
    double udu = dot3(ud, u, m);
    Vec3<double> ul = lower3(u, m);
    Vec3<double> udl = lower3(ud, m);
    std::vector<double> e(3);
    for (int a = 0; a < 3; ++a)
        e[a] = c2[a] / n3 - 3.0 * c1[a] * udu / n5 + gp.mu * (uu * udl[a] - udu * ul[a]) / n3;
    return e;
}

// The homogeneous Lagrangian family on the velocity space (beta = 0, 1, 2),
// normalized so that its Euler-Poisson expression reproduces
// homogeneous_residual with the same constant mu.
template <class T>
T hom_lagrangian_value(int beta, const Vec3<T>& u, const Vec3<T>& ud, const MetricConfig& m,
                       const GeometryParams& gp) {
    T uu = dot3(u, u, m);
    if (lead(uu) <= 0.0) throw DomainError("hom_lagrangian: |u|^2 <= 0");
    T nu = sqrt(uu);
    Vec3<T> eb{T{}, T{}, T{}};
    eb[beta] = T(1.0);
    Vec3<T> cx = cross3(u, eb, m);
    T den = norm2_cov(cx, m);
    if (std::abs(lead(den)) < 1e-12) throw DomainError("hom_lagrangian: |u x e_beta|^2 = 0");
    T triple = triple3(ud, u, eb, m);
    return -u[beta] * triple / (nu * den) - gp.mu * nu;
}

// gauge addition: udot . d_u phi + a . u for a degree-0 homogeneous phi
template <class Phi, class T>
T gauge_term_value(const Phi& phi, const Vec3<T>& u, const Vec3<T>& ud, const Vec3<double>& a) {
    Vec3<Dual<T>> us{Dual<T>{u[0], T{}}, Dual<T>{u[1], T{}}, Dual<T>{u[2], T{}}};
    Vec3<T> grad;
    for (int k = 0; k < 3; ++k) {
        Vec3<Dual<T>> q = us;
        q[k].b = T(1.0);
        grad[k] = phi(q).b;
    }
    // degree-0 homogeneity constraint u . d_u phi = 0, checked numerically
    double c = lead(u[0]) * lead(grad[0]) + lead(u[1]) * lead(grad[1]) + lead(u[2]) * lead(grad[2]);
    if (std::abs(c) > 1e-9) throw GaugeViolation("gauge phi violates u . d_u phi = 0");
    T out = ud[0] * grad[0] + ud[1] * grad[1] + ud[2] * grad[2];
    out += u[0] * a[0] + u[1] * a[1] + u[2] * a[2];
    return out;
}

// Example gauge function of homogeneity degree zero.
struct RatioGauge {
    template <class T>
    T operator()(const Vec3<T>& u) const {
        return u[1] * u[2] / (u[0] * u[0] + u[1] * u[1] + u[2] * u[2]);
    }
};

template <class Phi>
auto hom_lagrangian_field(int beta, const MetricConfig& m, const GeometryParams& gp,
                          Phi phi, const Vec3<double>& a) {
    return make_scalar_field(2, 3, false, [beta, m, gp, phi, a](const auto& p) {
        using T = std::decay_t<decltype(p.t)>;
        Vec3<T> u = detail::v3(p.v[0]);
        Vec3<T> ud = detail::v3(p.v[1]);
        T val = hom_lagrangian_value(beta, u, ud, m, gp);
        return val + gauge_term_value(phi, u, ud, a);
    });
}

inline auto hom_lagrangian_field(int beta, const MetricConfig& m, const GeometryParams& gp) {
    return make_scalar_field(2, 3, false, [beta, m, gp](const auto& p) {
        using T = std::decay_t<decltype(p.t)>;
        Vec3<T> u = detail::v3(p.v[0]);
        Vec3<T> ud = detail::v3(p.v[1]);
        return hom_lagrangian_value(beta, u, ud, m, gp);
    });
}

template <class Phi>
auto gauge_only_field(Phi phi, const Vec3<double>& a) {
    return make_scalar_field(2, 3, false, [phi, a](const auto& p) {
        using T = std::decay_t<decltype(p.t)>;
        Vec3<T> u = detail::v3(p.v[0]);
        Vec3<T> ud = detail::v3(p.v[1]);
        return gauge_term_value(phi, u, ud, a);
    });
}

// --- invariant momentum ------------------------------------------------------

// P = (udot x u)/|u|^3 + mu u/|u|, covariant; its total derivative along any
// curve equals homogeneous_residual identically.
inline Vec3<double> invariant_momentum(const Vec3<double>& u, const Vec3<double>& ud,
                                       const MetricConfig& m, const GeometryParams& gp) {
    double uu = dot3(u, u, m);
    if (uu <= 0.0) throw NullVelocity("invariant_momentum: |u|^2 <= 0");
    double nu = std::sqrt(uu);
    Vec3<double> c = cross3(ud, u, m);
    Vec3<double> ul = lower3(u, m);
    Vec3<double> out;
    for (int a = 0; a < 3; ++a) out[a] = c[a] / (nu * uu) + gp.mu * ul[a] / nu;
    return out;
}

} // namespace varjet
