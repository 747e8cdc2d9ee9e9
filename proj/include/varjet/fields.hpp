// Scalar fields and source forms on jet spaces.
//
// A field is any callable that maps JetVals<T> -> T for every ring T the
// caller instantiates it at; a source form maps to std::vector<T>.  The
// wrappers below attach the arity metadata (order, dim, time dependence)
// that the variational operators validate against.
#pragma once

#include <utility>
#include <vector>

#include "jet_point.hpp"

namespace varjet {

struct FieldInfo {
    int order = 0;        // highest derivative row the field reads is v_{order-1}
    int dim = 0;          // number of dependent coordinates
    bool time_dep = false;
};

template <class Fn>
struct ScalarField {
    FieldInfo info;
    Fn fn;

    template <class T>
    T operator()(const JetVals<T>& p) const {
        return fn(p);
    }
};

template <class Fn>
ScalarField<Fn> make_scalar_field(int order, int dim, bool time_dep, Fn fn) {
    return {FieldInfo{order, dim, time_dep}, std::move(fn)};
}

template <class Fn>
struct SourceFormField {
    FieldInfo info;
    Fn fn;

    template <class T>
    std::vector<T> operator()(const JetVals<T>& p) const {
        return fn(p);
    }
};

template <class Fn>
SourceFormField<Fn> make_source_form(int order, int dim, Fn fn) {
    return {FieldInfo{order, dim, false}, std::move(fn)};
}

// Total derivative of a field, as a field one order higher: evaluate g
// along the jet's own curve and read the linear series coefficient.
template <class G>
struct TotalDerivativeField {
    G base;

    template <class T>
    T operator()(const JetVals<T>& p) const {
        JetVals<Series<T>> c = curve_values(p, 1);
        return nth_derivative(base(c), 1);
    }
};

template <class G>
TotalDerivativeField<G> total_derivative_field(G base) {
    return {std::move(base)};
}

// Sum of a field and a scaled second field, useful for gauge checks.
template <class F, class G>
struct FieldSum {
    F f;
    G g;
    double wg = 1.0;

    template <class T>
    T operator()(const JetVals<T>& p) const {
        return f(p) + wg * g(p);
    }
};

template <class F, class G>
FieldSum<F, G> field_sum(F f, G g, double wg = 1.0) {
    return {std::move(f), std::move(g), wg};
}

} // namespace varjet
