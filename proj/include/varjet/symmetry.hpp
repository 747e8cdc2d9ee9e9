// Point-symmetry machinery: prolongation of point generators, the
// (pseudo)Euclidean generator family parametrized by a skew matrix W and a
// vector P, the invariance residual of the affine normal form with the
// multiplier matrices eliminated, and the independent on-shell check that
// the prolonged generator annihilates the equation on its zero set.
#pragma once

#include <vector>

#include "affine.hpp"
#include "fields.hpp"
#include "metric.hpp"

namespace varjet {

// A point generator T(t,x) d_t + Xi^i(t,x) d_x^i given by two callables
// evaluable on any ring.
template <class FT, class FX>
struct PointGenerator {
    FT Tf; // (T t, vector<T> x) -> T
    FX Xf; // (T t, vector<T> x) -> vector<T>
};

template <class FT, class FX>
PointGenerator<FT, FX> point_generator(FT t, FX x) {
    return {std::move(t), std::move(x)};
}

struct Prolongation {
    double T = 0.0;
    std::vector<double> Xi;
    std::vector<std::vector<double>> phi; // phi[s] multiplies d/dv_s
};

// Generic prolongation by the recursion phi^{s+1} = D_t phi^s - v_s D_t T,
// phi^0 = Xi, evaluated as series along the curve of the jet.
template <class FT, class FX>
Prolongation prolong(const PointGenerator<FT, FX>& gen, int r, const ContactJet& j) {
    if (j.order < r) throw OrderExceeded("prolong: jet order below prolongation order");
    const int n = j.dim;
    const int K = r;

    using S = Series<double>;
    S ts = S::variable(j.t, K);
    std::vector<S> xs(n);
    for (int i = 0; i < n; ++i) {
        S s = S::constant(j.x[i], K);
        for (int m = 1; m <= K && m - 1 < j.order; ++m) s.c[m] = j.derivs[m - 1][i] / kFactorial[m];
        xs[i] = s;
    }

    S T = gen.Tf(ts, xs);
    std::vector<S> phi = gen.Xf(ts, xs);

    Prolongation out;
    out.T = T.c[0];
    out.Xi.resize(n);
    for (int i = 0; i < n; ++i) out.Xi[i] = phi[i].c[0];

    out.phi.assign(r, std::vector<double>(n, 0.0));
    S DT = (K >= 1) ? derivative_series(T) : S(0.0, 0);
    for (int s = 0; s < r; ++s) {
        const int ord = K - s - 1; // order of phi^{s+1} as a series
        std::vector<S> next(n);
        for (int i = 0; i < n; ++i) {
            S vs;
            vs.order = ord;
            for (int m = 0; m <= ord; ++m) {
                int row = s + m;
                vs.c[m] = (row < j.order) ? j.derivs[row][i] / kFactorial[m] : 0.0;
            }
            next[i] = derivative_series(phi[i]) - vs * DT.truncated(ord);
            out.phi[s][i] = next[i].c[0];
        }
        phi = std::move(next);
    }
    return out;
}

// --- the (pseudo)Euclidean generator family ---------------------------------

// X = -(P.x) d_t + (eta t P + R x) . d_x with R = g^{-1} W, W skew.
struct EuclideanGenerator {
    Mat2<double> W;
    Vec2<double> P;
    MetricConfig m;

    Mat2<double> rotation() const {
        Mat2<double> r;
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) r[i][j] = m.g_spatial(i) * W[i][j];
        return r;
    }

    auto generator() const {
        MetricConfig mc = m;
        Vec2<double> p = P;
        Mat2<double> r = rotation();
        auto tf = [mc, p](const auto& t, const auto& x) {
            (void)t;
            return -(x[0] * (p[0] * mc.g_spatial(0)) + x[1] * (p[1] * mc.g_spatial(1)));
        };
        auto xf = [mc, p, r](const auto& t, const auto& x) {
            using T = std::decay_t<decltype(t)>;
            std::vector<T> out(2);
            for (int i = 0; i < 2; ++i)
                out[i] = t * (double(mc.eta) * p[i]) + r[i][0] * x[0] + r[i][1] * x[1];
            return out;
        };
        return point_generator(tf, xf);
    }

    // first and second prolongation coefficients at (v, v'), closed form
    Vec2<double> phi1(const Vec2<double>& v) const {
        Mat2<double> r = rotation();
        double pv = sdot(P, v, m);
        Vec2<double> out;
        for (int i = 0; i < 2; ++i)
            out[i] = m.eta * P[i] + pv * v[i] + r[i][0] * v[0] + r[i][1] * v[1];
        return out;
    }
    Vec2<double> phi2(const Vec2<double>& v, const Vec2<double>& vp) const {
        Mat2<double> r = rotation();
        double pv = sdot(P, v, m);
        double pvp = sdot(P, vp, m);
        Vec2<double> out;
        for (int i = 0; i < 2; ++i)
            out[i] = 2.0 * pv * vp[i] + pvp * v[i] + r[i][0] * vp[0] + r[i][1] * vp[1];
        return out;
    }
};

inline auto dilation_generator() {
    auto tf = [](const auto& t, const auto& x) {
        (void)x;
        using T = std::decay_t<decltype(t)>;
        return T{};
    };
    auto xf = [](const auto& t, const auto& x) {
        (void)t;
        using T = std::decay_t<decltype(t)>;
        return std::vector<T>(x.begin(), x.end());
    };
    return point_generator(tf, xf);
}

// --- invariance residual -----------------------------------------------------

// K(v, v') of the affine form, over an arbitrary ring.
template <class F, class T>
Vec2<T> affine_K_values(const F& fld, const Vec2<T>& v, const Vec2<T>& vp) {
    JetVals<T> p;
    p.t = T{};
    p.x = {T{}, T{}};
    p.v = {{v[0], v[1]}, {vp[0], vp[1]}, {T{}, T{}}};
    auto r = assemble_affine_values(fld, p);
    return {r.K[0], r.K[1]};
}

struct InvarianceResult {
    Mat2<double> Phi;
    Vec2<double> residual;
    double max_abs() const { return std::max(std::abs(residual[0]), std::abs(residual[1])); }
};

// Residual of the final invariance identity with the multipliers
// Phi, Pi, Xi eliminated from the dv', dv and dx coefficient identities:
//
//   Phi = [(phi1 . d_V) A + 2 (P.V) A + (A V) (x) P + A R] A^{-1}
//   Pi  = 2 (A V') (x) P + (P.V') A,   Xi = -K (x) P
//   residual = X(K) - Phi K + Xi V + Pi V'
//
// where X(K) = (phi1 . d_V) K + (phi2 . d_V') K.  A and K are assumed
// independent of t and x.
template <class F>
InvarianceResult invariance_residual(const F& fld, const Mat2<double>& W, const Vec2<double>& P,
                                     const Vec2<double>& v, const Vec2<double>& vp,
                                     const MetricConfig& m) {
    EuclideanGenerator gen{W, P, m};
    Vec2<double> f1 = gen.phi1(v);
    Vec2<double> f2 = gen.phi2(v, vp);
    Mat2<double> R = gen.rotation();

    // A and its phi1-directional derivative
    JetVals<Dual<double>> pv;
    pv.t = Dual<double>(0.0);
    pv.x = {Dual<double>(0.0), Dual<double>(0.0)};
    pv.v = {{Dual<double>{v[0], f1[0]}, Dual<double>{v[1], f1[1]}}};
    Mat2<Dual<double>> ad = fld.A(pv);
    Mat2<double> A, XA;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            A[i][j] = ad[i][j].a;
            XA[i][j] = ad[i][j].b;
        }
    double det = A[0][0] * A[1][1] - A[0][1] * A[1][0];
    if (std::abs(det) < 1e-14) throw SingularA("invariance_residual: A singular");
    Mat2<double> Ainv{{{A[1][1] / det, -A[0][1] / det}, {-A[1][0] / det, A[0][0] / det}}};

    // K and X(K) in one dual pass
    using D = Dual<double>;
    Vec2<D> vd{D{v[0], f1[0]}, D{v[1], f1[1]}};
    Vec2<D> vpd{D{vp[0], f2[0]}, D{vp[1], f2[1]}};
    Vec2<D> kd = affine_K_values(fld, vd, vpd);
    Vec2<double> K{kd[0].a, kd[1].a};
    Vec2<double> XK{kd[0].b, kd[1].b};

    double pv_dot = sdot(P, v, m);
    double pvp_dot = sdot(P, vp, m);
    Vec2<double> Pl = lower2(P, m);
    Vec2<double> Av{A[0][0] * v[0] + A[0][1] * v[1], A[1][0] * v[0] + A[1][1] * v[1]};
    Vec2<double> Avp{A[0][0] * vp[0] + A[0][1] * vp[1], A[1][0] * vp[0] + A[1][1] * vp[1]};

    Mat2<double> lhs; // dv'-coefficient identity, to be multiplied by A^{-1}
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            double ar = A[i][0] * R[0][j] + A[i][1] * R[1][j];
            lhs[i][j] = XA[i][j] + 2.0 * pv_dot * A[i][j] + Av[i] * Pl[j] + ar;
        }
    InvarianceResult out;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            out.Phi[i][j] = lhs[i][0] * Ainv[0][j] + lhs[i][1] * Ainv[1][j];

    for (int i = 0; i < 2; ++i) {
        double phiK = out.Phi[i][0] * K[0] + out.Phi[i][1] * K[1];
        out.residual[i] = XK[i] - phiK - pv_dot * K[i] + 3.0 * pvp_dot * Avp[i];
    }
    return out;
}

// --- independent on-shell check ----------------------------------------------

template <class F>
ContactJet onshell_jet(const F& fld, double t, const Vec2<double>& x, const Vec2<double>& v,
                       const Vec2<double>& vp) {
    Vec2<double> vpp = solve_top_order(fld, t, x, v, vp);
    ContactJet j = ContactJet::zero(3, 2);
    j.t = t;
    j.x = {x[0], x[1]};
    j.derivs[0] = {v[0], v[1]};
    j.derivs[1] = {vp[0], vp[1]};
    j.derivs[2] = {vpp[0], vpp[1]};
    return j;
}

// (X^(3) E)(j) for a third-order source form E at an on-shell jet.
template <class E, class FT, class FX>
std::vector<double> onshell_symmetry_residual(const E& src, const PointGenerator<FT, FX>& gen,
                                              const ContactJet& j, double onshell_tol = 1e-9) {
    std::vector<double> e0 = src(values_of(j));
    for (double v : e0)
        if (std::abs(v) > onshell_tol) throw NotOnShell("onshell_symmetry_residual: E(j) != 0");

    Prolongation pr = prolong(gen, 3, j);
    JetVals<Dual<double>> q = dual_values(values_of(j));
    q.t.b = pr.T;
    for (int i = 0; i < j.dim; ++i) q.x[i].b = pr.Xi[i];
    for (int s = 0; s < 3; ++s)
        for (int i = 0; i < j.dim; ++i) q.v[s][i].b = pr.phi[s][i];
    std::vector<Dual<double>> val = src(q);
    std::vector<double> out(j.dim);
    for (int i = 0; i < j.dim; ++i) out[i] = val[i].b;
    return out;
}

} // namespace varjet
