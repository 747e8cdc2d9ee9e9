// The affine third-order normal form E = A.v'' + (v'.d_v)A.v' + B.v' + C
// with A skew, together with its Lepage coefficient K = E - A.v'' and the
// constraint PDE system the coefficients must satisfy.
//
// A, B, C are callables on order-1 jet values (t, x, v) returning matrix /
// vector values in the evaluation ring.  The truncated total derivative
// D1 = d_t + v . d_x is realized by evaluating along its flow line
// (t + tau, x + v tau, v), so no symbolic differentiation is needed.
#pragma once

#include <vector>

#include "fields.hpp"
#include "metric.hpp"

namespace varjet {

template <class FA, class FB, class FC>
struct AffineThirdOrder {
    FA A; // JetVals<T> -> Mat2<T>, skew-symmetric pointwise
    FB B; // JetVals<T> -> Mat2<T>
    FC C; // JetVals<T> -> Vec2<T>
};

template <class FA, class FB, class FC>
AffineThirdOrder<FA, FB, FC> affine_third_order(FA a, FB b, FC c) {
    return {std::move(a), std::move(b), std::move(c)};
}

namespace detail {
// order-1 evaluation point holding only (t, x, v)
template <class T>
JetVals<T> base_point(const JetVals<T>& p) {
    JetVals<T> q;
    q.t = p.t;
    q.x = p.x;
    q.v.assign(1, p.v[0]);
    return q;
}
} // namespace detail

// E and K at a third-order jet value; the directional derivative
// (v'.d_v)A comes from one dual-seeded evaluation of A.
template <class T>
struct AssembledAffine {
    Vec2<T> E;
    Vec2<T> K;
    Mat2<T> A;
};

template <class F, class T>
AssembledAffine<T> assemble_affine_values(const F& fld, const JetVals<T>& p) {
    JetVals<T> base = detail::base_point(p);
    JetVals<Dual<T>> seeded = dual_values(base);
    for (int i = 0; i < 2; ++i) seeded.v[0][i].b = p.v[1][i]; // direction v'

    Mat2<Dual<T>> ad = fld.A(seeded);
    Mat2<T> b = fld.B(base);
    Vec2<T> c = fld.C(base);

    AssembledAffine<T> out;
    for (int i = 0; i < 2; ++i) {
        T k = c[i];
        for (int j = 0; j < 2; ++j) {
            k += ad[i][j].b * p.v[1][j]; // ((v'.d_v)A . v')_i
            k += b[i][j] * p.v[1][j];
            out.A[i][j] = ad[i][j].a;
        }
        out.K[i] = k;
        out.E[i] = k + out.A[i][0] * p.v[2][0] + out.A[i][1] * p.v[2][1];
    }
    return out;
}

template <class F>
std::vector<double> assemble_affine(const F& fld, const ContactJet& j) {
    if (j.order < 3) throw OrderExceeded("assemble_affine: jet order below 3");
    auto r = assemble_affine_values(fld, values_of(j));
    return {r.E[0], r.E[1]};
}

template <class F>
std::vector<double> lepage_coefficient(const F& fld, const ContactJet& j) {
    auto r = assemble_affine_values(fld, values_of(j));
    return {r.K[0], r.K[1]};
}

// The assembled equation as a source form of order 3 (dim 2).
template <class F>
struct AffineSourceForm {
    FieldInfo info{3, 2, true};
    F fld;

    template <class T>
    std::vector<T> operator()(const JetVals<T>& p) const {
        auto r = assemble_affine_values(fld, p);
        return {r.E[0], r.E[1]};
    }
};

template <class F>
AffineSourceForm<F> affine_source_form(F fld) {
    return {FieldInfo{3, 2, true}, std::move(fld)};
}

// Solve A(t,x,v) v'' = -K(t,x,v,v') for v'';  SingularA if det A vanishes.
template <class F>
Vec2<double> solve_top_order(const F& fld, double t, const Vec2<double>& x,
                             const Vec2<double>& v, const Vec2<double>& vp) {
    JetVals<double> p;
    p.t = t;
    p.x = {x[0], x[1]};
    p.v = {{v[0], v[1]}, {vp[0], vp[1]}, {0.0, 0.0}};
    auto r = assemble_affine_values(fld, p);
    double det = r.A[0][0] * r.A[1][1] - r.A[0][1] * r.A[1][0];
    if (std::abs(det) < 1e-14) throw SingularA("solve_top_order: A is singular");
    double b0 = -r.K[0], b1 = -r.K[1];
    return {(r.A[1][1] * b0 - r.A[0][1] * b1) / det,
            (-r.A[1][0] * b0 + r.A[0][0] * b1) / det};
}

// --- constraint PDE system -------------------------------------------------

// Values of the six constraint tensors at a point (t, x, v).  Tensors 1, 3
// and 5 carry three indices (i, j, l), the others two; brackets are weighted
// antisymmetrizations, parentheses weighted symmetrizations.
struct ConstraintResiduals {
    // flattened [i][j][l] and [i][j] tensors, n = 2
    std::array<double, 8> r1{}, r3{}, r5{};
    std::array<double, 4> r2{}, r4{}, r6{};

    double max_abs() const {
        double m = 0.0;
        for (double v : r1) m = std::max(m, std::abs(v));
        for (double v : r2) m = std::max(m, std::abs(v));
        for (double v : r3) m = std::max(m, std::abs(v));
        for (double v : r4) m = std::max(m, std::abs(v));
        for (double v : r5) m = std::max(m, std::abs(v));
        for (double v : r6) m = std::max(m, std::abs(v));
        return m;
    }
    std::array<double, 6> max_by_equation() const {
        auto mx = [](auto const& a) {
            double m = 0.0;
            for (double v : a) m = std::max(m, std::abs(v));
            return m;
        };
        return {mx(r1), mx(r2), mx(r3), mx(r4), mx(r5), mx(r6)};
    }
};

namespace detail {

// Everything the six equations need, obtained from dual-seeded evaluations
// along the D1 flow line.
struct AbcDerivatives {
    // value series index: [i][j] matrices as 2x2 of series read-offs
    double A[2][2], B[2][2], C[2];
    double dvA[2][2][2], dxA[2][2][2];      // [l][i][j]
    double dvB[2][2][2], dxB[2][2][2];
    double dvC[2][2], dxC[2][2];            // [l][i]
    double dvdvC[2][2][2];                  // [l][m][i]
    double d1A[2][2], d1B[2][2], d1C[2];
    double d1dvA[2][2][2], d1dvC[2][2];     // [l][i][j] / [l][i]
    double d1dxA[2][2][2];
    double d2dvA[2][2][2];
    double d3A[2][2];
};

template <class F>
AbcDerivatives abc_derivatives(const F& fld, double t, const Vec2<double>& x,
                               const Vec2<double>& v) {
    using S = Series<double>;
    using R = Tower2<S>; // two dual slots over the D1-flow series
    const int K = 3;     // D1^3 is the deepest total-derivative power

    auto flow_point = []( double t, const Vec2<double>& x, const Vec2<double>& v, int K) {
        JetVals<R> p;
        S ts = S::variable(t, K);
        S x0 = S::constant(x[0], K), x1 = S::constant(x[1], K);
        x0.c[1] = v[0];
        x1.c[1] = v[1];
        S v0 = S::constant(v[0], K), v1 = S::constant(v[1], K);
        auto mk = [](S s) { return R{Dual<S>{s, S(0.0, s.order)}, Dual<S>{S(0.0, s.order), S(0.0, s.order)}}; };
        p.t = mk(ts);
        p.x = {mk(x0), mk(x1)};
        p.v = {{mk(v0), mk(v1)}};
        return p;
    };

    AbcDerivatives d{};
    JetVals<R> base = flow_point(t, x, v, K);

    // plain values and pure D1 powers
    {
        Mat2<R> a = fld.A(base);
        Mat2<R> b = fld.B(base);
        Vec2<R> c = fld.C(base);
        for (int i = 0; i < 2; ++i) {
            d.C[i] = tower_base(c[i]).c[0];
            d.d1C[i] = nth_derivative(tower_base(c[i]), 1);
            for (int j = 0; j < 2; ++j) {
                d.A[i][j] = tower_base(a[i][j]).c[0];
                d.B[i][j] = tower_base(b[i][j]).c[0];
                d.d1A[i][j] = nth_derivative(tower_base(a[i][j]), 1);
                d.d1B[i][j] = nth_derivative(tower_base(b[i][j]), 1);
                d.d3A[i][j] = nth_derivative(tower_base(a[i][j]), 3);
            }
        }
    }

    // single v_l / x_l seeds in slot 1
    for (int l = 0; l < 2; ++l) {
        JetVals<R> pv = base;
        tower_slot1(pv.v[0][l]) = S(1.0, K);
        Mat2<R> av = fld.A(pv);
        Mat2<R> bv = fld.B(pv);
        Vec2<R> cv = fld.C(pv);
        for (int i = 0; i < 2; ++i) {
            d.dvC[l][i] = tower_slot1(cv[i]).c[0];
            d.d1dvC[l][i] = nth_derivative(tower_slot1(cv[i]), 1);
            for (int j = 0; j < 2; ++j) {
                d.dvA[l][i][j] = tower_slot1(av[i][j]).c[0];
                d.dvB[l][i][j] = tower_slot1(bv[i][j]).c[0];
                d.d1dvA[l][i][j] = nth_derivative(tower_slot1(av[i][j]), 1);
                d.d2dvA[l][i][j] = nth_derivative(tower_slot1(av[i][j]), 2);
            }
        }

        JetVals<R> px = base;
        // seeding x_l: the flow series of x_l is (x_l + v_l tau); the seed
        // perturbs the initial position only
        tower_slot1(px.x[l]) = S(1.0, K);
        Mat2<R> ax = fld.A(px);
        Mat2<R> bx = fld.B(px);
        Vec2<R> cx = fld.C(px);
        for (int i = 0; i < 2; ++i) {
            d.dxC[l][i] = tower_slot1(cx[i]).c[0];
            for (int j = 0; j < 2; ++j) {
                d.dxA[l][i][j] = tower_slot1(ax[i][j]).c[0];
                d.dxB[l][i][j] = tower_slot1(bx[i][j]).c[0];
                d.d1dxA[l][i][j] = nth_derivative(tower_slot1(ax[i][j]), 1);
            }
        }
    }

    // mixed v_l, v_m seeds for the second C derivatives
    for (int l = 0; l < 2; ++l) {
        for (int m = 0; m < 2; ++m) {
            JetVals<R> p = base;
            tower_slot1(p.v[0][l]) = S(1.0, K);
            tower_slot2(p.v[0][m]) = S(1.0, K);
            Vec2<R> c = fld.C(p);
            for (int i = 0; i < 2; ++i) d.dvdvC[l][m][i] = tower_mixed(c[i]).c[0];
        }
    }
    return d;
}

} // namespace detail

// The six left-hand sides of the constraint system at (t, x, v); bracketed
// index groups carry the conventional 1/k! weights.
template <class F>
ConstraintResiduals constraint_residuals(const F& fld, double t, const Vec2<double>& x,
                                         const Vec2<double>& v) {
    detail::AbcDerivatives d = detail::abc_derivatives(fld, t, x, v);
    ConstraintResiduals out;

    auto idx3 = [](int i, int j, int l) { return ((i * 2) + j) * 2 + l; };
    auto idx2 = [](int i, int j) { return i * 2 + j; };

    // (1)  d_v[i A_jl] : full antisymmetrization over (i, j, l)
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (int l = 0; l < 2; ++l) {
                double s = d.dvA[i][j][l] - d.dvA[i][l][j] + d.dvA[j][l][i] -
                           d.dvA[j][i][l] + d.dvA[l][i][j] - d.dvA[l][j][i];
                out.r1[idx3(i, j, l)] = s / 6.0;
            }

    // (2)  2 B_[ij] - 3 D1 A_ij
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            out.r2[idx2(i, j)] = (d.B[i][j] - d.B[j][i]) - 3.0 * d.d1A[i][j];

    // (3)  2 d_v[i B_j]l - 4 d_x[i A_j]l + d_xl A_ij + 2 D1 d_vl A_ij
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (int l = 0; l < 2; ++l)
                out.r3[idx3(i, j, l)] = (d.dvB[i][j][l] - d.dvB[j][i][l]) -
                                        2.0 * (d.dxA[i][j][l] - d.dxA[j][i][l]) +
                                        d.dxA[l][i][j] + 2.0 * d.d1dvA[l][i][j];

    // (4)  d_v(i C_j) - D1 B_(ij)
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            out.r4[idx2(i, j)] = 0.5 * (d.dvC[i][j] + d.dvC[j][i]) -
                                 0.5 * (d.d1B[i][j] + d.d1B[j][i]);

    // (5)  2 d_vl d_v[i C_j] - 4 d_x[i B_j]l + D1^2 d_vl A_ij + 6 D1 d_x[i A_jl]
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (int l = 0; l < 2; ++l) {
                double dvdv = d.dvdvC[l][i][j] - d.dvdvC[l][j][i];
                double dxB = d.dxB[i][j][l] - d.dxB[j][i][l];
                double d1dxA = d.d1dxA[i][j][l] - d.d1dxA[i][l][j] + d.d1dxA[j][l][i] -
                               d.d1dxA[j][i][l] + d.d1dxA[l][i][j] - d.d1dxA[l][j][i];
                out.r5[idx3(i, j, l)] =
                    dvdv - 2.0 * dxB + d.d2dvA[l][i][j] + d1dxA;
            }

    // (6)  4 d_x[i C_j] - 2 D1 d_v[i C_j] - D1^3 A_ij
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            out.r6[idx2(i, j)] = 2.0 * (d.dxC[i][j] - d.dxC[j][i]) -
                                 (d.d1dvC[i][j] - d.d1dvC[j][i]) - d.d3A[i][j];

    return out;
}

// Pointwise skewness defect of the A coefficient; part of the normal-form
// preconditions rather than of the six PDEs, and the quantity the
// symmetrized negative control trips.
template <class F>
double skewness_defect(const F& fld, double t, const Vec2<double>& x, const Vec2<double>& v) {
    JetVals<double> p;
    p.t = t;
    p.x = {x[0], x[1]};
    p.v = {{v[0], v[1]}};
    Mat2<double> a = fld.A(p);
    double m = 0.0;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) m = std::max(m, std::abs(a[i][j] + a[j][i]));
    return m;
}

} // namespace varjet
