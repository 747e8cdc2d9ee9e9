// The Euler-Poisson operator E_i = sum_s (-1)^s D_t^s dL/dv_{s-1}^i
// (v_{-1} = x), computed by evaluation alone: the partial derivative is a
// dual perturbation, the total derivative powers are coefficients of the
// series along the polynomial curve the jet defines.
#pragma once

#include <vector>

#include "fields.hpp"

namespace varjet {

// Generic core: evaluates at any coefficient ring T, which is what allows
// an Euler-Poisson output to be fed back through the Helmholtz operator.
template <class L, class T>
std::vector<T> euler_poisson_values(const L& lagr, int order, const JetVals<T>& p) {
    const int k = order;
    const int n = p.dim();
    if (p.order() < 2 * k) throw OrderExceeded("euler_poisson: jet order below 2k");

    JetVals<Series<T>> curve = curve_values(p, k);
    JetVals<Dual<Series<T>>> lifted = dual_values(curve);

    std::vector<T> e(n, T{});
    for (int i = 0; i < n; ++i) {
        for (int s = 0; s <= k; ++s) {
            JetVals<Dual<Series<T>>> q = lifted;
            Coord c = (s == 0) ? Coord::pos(i) : Coord::deriv(s - 1, i);
            seed(q, c, Series<T>(1.0, k));
            Series<T> partial = lagr(q).b; // dL/dv_{s-1}^i along the curve
            T term = nth_derivative(partial, s);
            if (s % 2 == 0)
                e[i] += term;
            else
                e[i] -= term;
        }
    }
    return e;
}

template <class L>
std::vector<double> euler_poisson(const L& lagr, const ContactJet& j) {
    return euler_poisson_values(lagr, lagr.info.order, values_of(j));
}

template <class L>
std::vector<double> euler_poisson(const L& lagr, const VelocityJet& w) {
    return euler_poisson_values(lagr, lagr.info.order, values_of(w));
}

// The Euler-Poisson output packaged as a source form of order 2k.
template <class L>
struct EulerPoissonForm {
    FieldInfo info;
    L lagr;
    int k;

    template <class T>
    std::vector<T> operator()(const JetVals<T>& p) const {
        return euler_poisson_values(lagr, k, p);
    }
};

template <class L>
EulerPoissonForm<L> euler_poisson_form(L lagr) {
    const FieldInfo li = lagr.info;
    return {FieldInfo{2 * li.order, li.dim, li.time_dep}, std::move(lagr), li.order};
}

} // namespace varjet
