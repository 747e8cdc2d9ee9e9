// Jet-space points and the tower/series-valued evaluation points that
// scalar fields are evaluated on.
//
// A ContactJet is a graph-form jet (t, x, v, v', ..., v_{r-1}); a
// VelocityJet is a parametrized-curve jet with rows x, u, udot, ....
// JetVals<T> carries the same coordinates with values in an arbitrary
// ring T, so the same field code evaluates on plain numbers, on duals
// (partial derivatives) and on series along a prolonged curve (total
// derivatives).
#pragma once

#include <vector>

#include "dual.hpp"
#include "series.hpp"

namespace varjet {

struct ContactJet {
    int order = 0;                           // r: rows v .. v_{r-1}
    int dim = 0;                             // n
    double t = 0.0;
    std::vector<double> x;                   // n entries
    std::vector<std::vector<double>> derivs; // r rows of n entries

    static ContactJet zero(int order, int dim) {
        ContactJet j;
        j.order = order;
        j.dim = dim;
        j.x.assign(dim, 0.0);
        j.derivs.assign(order, std::vector<double>(dim, 0.0));
        return j;
    }
};

struct VelocityJet {
    int order = 0;                          // r: rows u .. u_{r-1} after the base row
    int dim = 0;                            // n+1
    std::vector<std::vector<double>> coords; // (order+1) rows: x, u, udot, ...

    static VelocityJet zero(int order, int dim) {
        VelocityJet w;
        w.order = order;
        w.dim = dim;
        w.coords.assign(order + 1, std::vector<double>(dim, 0.0));
        return w;
    }
};

// Jet of an orientation-free reparametrization rho with rho(0) = 0.
// coeffs[k] multiplies sigma^{k+1}; coeffs[0] must be nonzero.
struct ReparamJet {
    std::vector<double> coeffs;

    static ReparamJet identity(int order) {
        ReparamJet r;
        r.coeffs.assign(order, 0.0);
        if (order > 0) r.coeffs[0] = 1.0;
        return r;
    }
    double first() const { return coeffs.empty() ? 0.0 : coeffs[0]; }

    TaylorScalar series(int ord) const {
        TaylorScalar s;
        s.order = ord;
        for (int k = 1; k <= ord; ++k)
            s.c[k] = (k - 1 < int(coeffs.size())) ? coeffs[k - 1] : 0.0;
        return s;
    }
};

// Ring-valued jet coordinates: t, x^i and derivative rows v_0 .. v_{r-1}.
template <class T>
struct JetVals {
    T t{};
    std::vector<T> x;
    std::vector<std::vector<T>> v;

    int dim() const { return int(x.size()); }
    int order() const { return int(v.size()); }
};

inline JetVals<double> values_of(const ContactJet& j) {
    JetVals<double> p;
    p.t = j.t;
    p.x = j.x;
    p.v = j.derivs;
    return p;
}

// Velocity jets use the same container: x row as positions, u_s rows as
// derivative rows; the t slot is unused by autonomous fields.
inline JetVals<double> values_of(const VelocityJet& w) {
    JetVals<double> p;
    p.t = 0.0;
    p.x = w.coords[0];
    p.v.assign(w.coords.begin() + 1, w.coords.end());
    return p;
}

// Lift point values to the series ring along the curve the jet defines:
// every coordinate becomes its Taylor expansion in the curve parameter.
// Rows beyond the available jet data are expanded with zero coefficients,
// which is exact for the polynomial representative of the jet.
template <class T>
JetVals<Series<T>> curve_values(const JetVals<T>& p, int series_order) {
    const int n = p.dim();
    const int rows = p.order();
    JetVals<Series<T>> c;
    c.t = Series<T>::variable(p.t, series_order);
    c.x.resize(n);
    for (int i = 0; i < n; ++i) {
        Series<T> s = Series<T>::constant(p.x[i], series_order);
        for (int m = 1; m <= series_order && m - 1 < rows; ++m)
            s.c[m] = p.v[m - 1][i] * (1.0 / kFactorial[m]);
        c.x[i] = std::move(s);
    }
    c.v.assign(rows, {});
    for (int s = 0; s < rows; ++s) {
        c.v[s].resize(n);
        for (int i = 0; i < n; ++i) {
            Series<T> q = Series<T>::constant(p.v[s][i], series_order);
            for (int m = 1; m <= series_order && s + m < rows; ++m)
                q.c[m] = p.v[s + m][i] * (1.0 / kFactorial[m]);
            c.v[s][i] = std::move(q);
        }
    }
    return c;
}

// Lift every coordinate into Dual<T> with zero perturbation.
template <class T>
JetVals<Dual<T>> dual_values(const JetVals<T>& p) {
    JetVals<Dual<T>> d;
    d.t = Dual<T>(p.t, T{});
    d.x.reserve(p.x.size());
    for (const T& v : p.x) d.x.push_back(Dual<T>(v, T{}));
    d.v.resize(p.v.size());
    for (size_t s = 0; s < p.v.size(); ++s) {
        d.v[s].reserve(p.v[s].size());
        for (const T& v : p.v[s]) d.v[s].push_back(Dual<T>(v, T{}));
    }
    return d;
}

// Coordinate addresses for seeding perturbations: s = -2 is t, s = -1 is
// x^i, s >= 0 is the derivative row v_s.
struct Coord {
    int s;
    int i;
    static Coord time() { return {-2, 0}; }
    static Coord pos(int i) { return {-1, i}; }
    static Coord deriv(int s, int i) { return {s, i}; }
};

template <class T>
T& coord_ref(JetVals<T>& p, Coord c) {
    if (c.s == -2) return p.t;
    if (c.s == -1) return p.x[c.i];
    return p.v[c.s][c.i];
}

template <class T>
void seed(JetVals<Dual<T>>& p, Coord c, T amount) {
    coord_ref(p, c).b = std::move(amount);
}

// Graph-curve prolongation: x^i given as Taylor series in t about t0.
inline ContactJet prolong_curve(double t0, const std::vector<TaylorScalar>& xs, int order) {
    ContactJet j;
    j.dim = int(xs.size());
    j.order = order;
    j.t = t0;
    j.x.resize(j.dim);
    j.derivs.assign(order, std::vector<double>(j.dim, 0.0));
    for (int i = 0; i < j.dim; ++i) {
        if (xs[i].order < order) throw OrderExceeded("prolong_curve: series order too low");
        j.x[i] = xs[i].c[0];
        for (int s = 0; s < order; ++s) j.derivs[s][i] = nth_derivative(xs[i], s + 1);
    }
    return j;
}

} // namespace varjet
