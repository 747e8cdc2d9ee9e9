// The projection from parametrized-curve jets to graph-form contact jets,
// the reparametrization action, and homogenization of Lagrangians and
// source forms.
//
// The projection is implemented generically through series inversion and
// composition: treat the jet rows as Taylor data of (x^0(tau), x^i(tau)),
// invert the x^0 series about its base and compose.  The printed
// closed-form third-order expressions serve as a test oracle only.
#pragma once

#include <utility>
#include <vector>

#include "jet_point.hpp"

namespace varjet {

// Core of the projection over an arbitrary ring: rows = (x, u, udot, ...).
// Returns {t, x^i, v_s^i} with v rows 0..order-1.
template <class T>
JetVals<T> project_rows(const std::vector<std::vector<T>>& rows, int order) {
    const int dim = int(rows[0].size());
    const int n = dim - 1;
    if (int(rows.size()) < order + 1) throw OrderExceeded("project: too few jet rows");
    if (lead(rows[1][0]) == 0.0) throw ZeroTimeVelocity("project: u^0 = 0");

    // x^0(tau) - x^0(0) as a series with zero constant term
    Series<T> g;
    g.order = order;
    for (int m = 1; m <= order; ++m) g.c[m] = rows[m][0] * (1.0 / kFactorial[m]);
    Series<T> h = invert(g);

    JetVals<T> out;
    out.t = rows[0][0];
    out.x.resize(n);
    out.v.assign(order, std::vector<T>(n));
    for (int i = 0; i < n; ++i) {
        Series<T> s;
        s.order = order;
        s.c[0] = rows[0][i + 1];
        for (int m = 1; m <= order; ++m) s.c[m] = rows[m][i + 1] * (1.0 / kFactorial[m]);
        Series<T> graph = compose(s, h);
        out.x[i] = graph.c[0];
        for (int k = 0; k < order; ++k) out.v[k][i] = nth_derivative(graph, k + 1);
    }
    return out;
}

inline ContactJet project(const VelocityJet& w) {
    if (w.order > kMaxOrder - 1) throw OrderExceeded("project: order above 6 unsupported");
    std::vector<std::vector<double>> rows = w.coords;
    JetVals<double> p = project_rows(rows, w.order);
    ContactJet j;
    j.order = w.order;
    j.dim = w.dim - 1;
    j.t = p.t;
    j.x = p.x;
    j.derivs = p.v;
    return j;
}

// Right action of the reparametrization group: compose the curve's Taylor
// data with rho.
inline VelocityJet reparametrize(const VelocityJet& w, const ReparamJet& rho) {
    if (rho.first() == 0.0) throw SingularReparam("reparametrize: rho'(0) = 0");
    const int r = w.order;
    TaylorScalar rs = rho.series(r);
    VelocityJet out = VelocityJet::zero(r, w.dim);
    for (int a = 0; a < w.dim; ++a) {
        TaylorScalar s;
        s.order = r;
        s.c[0] = w.coords[0][a];
        for (int m = 1; m <= r; ++m) s.c[m] = w.coords[m][a] / kFactorial[m];
        TaylorScalar comp = compose(s, rs);
        out.coords[0][a] = comp.c[0];
        for (int m = 1; m <= r; ++m) out.coords[m][a] = nth_derivative(comp, m);
    }
    return out;
}

// Homogenization of a contact Lagrangian: Lh(w) = u^0 * L(project(w)).
// The wrapped field evaluates on velocity-jet coordinates of any ring.
template <class L>
struct HomogenizedLagrangian {
    L base;
    int order; // contact order of the base Lagrangian

    template <class T>
    T operator()(const JetVals<T>& w) const {
        std::vector<std::vector<T>> rows;
        rows.reserve(order + 1);
        rows.push_back(w.x);
        for (int s = 0; s < order; ++s) rows.push_back(w.v[s]);
        JetVals<T> contact = project_rows(rows, order);
        return w.v[0][0] * base(contact);
    }
};

template <class L>
HomogenizedLagrangian<L> homogenized_lagrangian(L base, int contact_order) {
    return {std::move(base), contact_order};
}

// Degree-1 equivariance defect under an orientation-preserving rho:
// Lh(w . rho) - rho'(0) * Lh(w); zero exactly when Lh passes to quotient.
template <class LH>
double equivariance_residual(const LH& lh, const VelocityJet& w, const ReparamJet& rho) {
    if (rho.first() <= 0.0) throw SingularReparam("equivariance: rho'(0) must be positive");
    VelocityJet moved = reparametrize(w, rho);
    return lh(values_of(moved)) - rho.first() * lh(values_of(w));
}

// Homogeneous counterpart of a source form per the quotient relation:
// eps_0 = -u^i E_i(project(w)), eps_i = u^0 E_i(project(w)).
template <class E>
std::vector<double> homogenize_source(const E& src, const VelocityJet& w) {
    ContactJet j = project(w);
    std::vector<double> e = src(values_of(j));
    const int n = j.dim;
    std::vector<double> eps(n + 1, 0.0);
    for (int i = 0; i < n; ++i) {
        eps[0] -= w.coords[1][i + 1] * e[i];
        eps[i + 1] = w.coords[1][0] * e[i];
    }
    return eps;
}

} // namespace varjet
