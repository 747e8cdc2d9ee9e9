// Truncated Taylor series over an arbitrary coefficient ring.
//
// Series<double> is the basic truncated-Taylor scalar; nesting it inside
// Dual<> (see dual.hpp) or inside another Series<> yields the evaluation
// rings used for total and partial derivatives of jet-space functions.
// All operations are exact truncations: coefficient k of a result depends
// only on coefficients 0..k of the operands.
//
// Orders. A series either carries an explicit truncation order or the
// kAutoOrder sentinel used by freshly built constants and zeros, which
// adopt the partner's order on first contact (truncation commutes with the
// ring operations, so this is sound).  Combining two different explicit
// orders is an error.
#pragma once

#include <array>
#include <cmath>
#include <initializer_list>

#include "errors.hpp"

namespace varjet {

// Fixed coefficient capacity: jets to order 6 plus one spare order.
inline constexpr int kMaxOrder = 7;
inline constexpr int kAutoOrder = -1;

inline constexpr std::array<double, kMaxOrder + 2> kFactorial = {
    1.0, 1.0, 2.0, 6.0, 24.0, 120.0, 720.0, 5040.0, 40320.0};

// Innermost numeric value of a (possibly nested) ring element.  Used for
// invertibility and domain checks, which always concern the base point.
inline double lead(double x) { return x; }

inline double pow_real(double x, double p) { return std::pow(x, p); }

// let generic ring code fall through to the plain math functions
using std::atan;
using std::sqrt;

template <class T>
struct Series {
    std::array<T, kMaxOrder + 1> c{};
    int order = kAutoOrder;

    Series() = default;
    explicit Series(double v) { c[0] = T(v); }
    Series(double v, int ord) : order(ord) { c[0] = T(v); }

    static Series constant(T v, int ord) {
        Series s;
        s.order = ord;
        s.c[0] = std::move(v);
        return s;
    }
    // Embedding of the expansion variable: v + tau.
    static Series variable(T v, int ord) {
        Series s = constant(std::move(v), ord);
        if (ord != 0) s.c[1] = T(1.0);
        return s;
    }

    int effective_order() const { return order < 0 ? kMaxOrder : order; }

    Series truncated(int ord) const {
        if (ord > effective_order()) throw OrderExceeded("Series::truncated: order grows");
        Series s;
        s.order = ord;
        for (int k = 0; k <= ord; ++k) s.c[k] = c[k];
        return s;
    }
};

namespace detail {
template <class T>
int resolve_order(const Series<T>& a, const Series<T>& b) {
    if (a.order == b.order) return a.order;
    if (a.order < 0) return b.order;
    if (b.order < 0) return a.order;
    throw OrderMismatch("series orders differ");
}
inline int loop_order(int order) { return order < 0 ? kMaxOrder : order; }
} // namespace detail

template <class T>
double lead(const Series<T>& s) {
    return lead(s.c[0]);
}

template <class T>
Series<T> operator+(const Series<T>& a, const Series<T>& b) {
    Series<T> r;
    r.order = detail::resolve_order(a, b);
    for (int k = 0; k <= detail::loop_order(r.order); ++k) r.c[k] = a.c[k] + b.c[k];
    return r;
}

template <class T>
Series<T> operator-(const Series<T>& a, const Series<T>& b) {
    Series<T> r;
    r.order = detail::resolve_order(a, b);
    for (int k = 0; k <= detail::loop_order(r.order); ++k) r.c[k] = a.c[k] - b.c[k];
    return r;
}

template <class T>
Series<T> operator-(const Series<T>& a) {
    Series<T> r;
    r.order = a.order;
    for (int k = 0; k <= detail::loop_order(r.order); ++k) r.c[k] = -a.c[k];
    return r;
}

template <class T>
Series<T> operator*(const Series<T>& a, const Series<T>& b) {
    Series<T> r;
    r.order = detail::resolve_order(a, b);
    for (int k = 0; k <= detail::loop_order(r.order); ++k) {
        T acc{};
        for (int j = 0; j <= k; ++j) acc += a.c[j] * b.c[k - j];
        r.c[k] = std::move(acc);
    }
    return r;
}

// Standard triangular solve for truncated division.
template <class T>
Series<T> operator/(const Series<T>& a, const Series<T>& b) {
    if (lead(b) == 0.0) throw ZeroConstantTerm("series division by zero constant term");
    Series<T> r;
    r.order = detail::resolve_order(a, b);
    for (int k = 0; k <= detail::loop_order(r.order); ++k) {
        T acc = a.c[k];
        for (int j = 1; j <= k; ++j) acc -= b.c[j] * r.c[k - j];
        r.c[k] = acc / b.c[0];
    }
    return r;
}

template <class T>
Series<T>& operator+=(Series<T>& a, const Series<T>& b) {
    a = a + b;
    return a;
}
template <class T>
Series<T>& operator-=(Series<T>& a, const Series<T>& b) {
    a = a - b;
    return a;
}

// scalar (double) arithmetic
template <class T>
Series<T> operator+(const Series<T>& a, double v) {
    Series<T> r = a;
    r.c[0] = r.c[0] + v;
    return r;
}
template <class T>
Series<T> operator+(double v, const Series<T>& a) { return a + v; }
template <class T>
Series<T> operator-(const Series<T>& a, double v) { return a + (-v); }
template <class T>
Series<T> operator-(double v, const Series<T>& a) { return -a + v; }
template <class T>
Series<T> operator*(const Series<T>& a, double v) {
    Series<T> r;
    r.order = a.order;
    for (int k = 0; k <= detail::loop_order(r.order); ++k) r.c[k] = a.c[k] * v;
    return r;
}
template <class T>
Series<T> operator*(double v, const Series<T>& a) { return a * v; }
template <class T>
Series<T> operator/(const Series<T>& a, double v) { return a * (1.0 / v); }
template <class T>
Series<T> operator/(double v, const Series<T>& b) {
    Series<T> num(v);
    return num / b;
}

// Value of the k-th total derivative encoded by the series: k! * c_k.
template <class T>
T nth_derivative(const Series<T>& s, int k) {
    if (k < 0 || k > s.effective_order())
        throw OrderExceeded("derivative order exceeds series order");
    return s.c[k] * kFactorial[k];
}

// Series of the derivative d/dtau: an explicit order drops by one.
template <class T>
Series<T> derivative_series(const Series<T>& s) {
    if (s.order == 0) throw OrderExceeded("cannot differentiate an order-0 series");
    Series<T> r;
    r.order = (s.order < 0) ? kAutoOrder : s.order - 1;
    for (int k = 0; k < detail::loop_order(s.order); ++k) r.c[k] = s.c[k + 1] * double(k + 1);
    return r;
}

// Truncated composition f(g(tau)); requires g to have zero constant term.
template <class T>
Series<T> compose(const Series<T>& f, const Series<T>& g) {
    if (lead(g) != 0.0) throw NonzeroInnerConstant("compose: inner constant term nonzero");
    const int ord = detail::resolve_order(f, g);
    const int n = detail::loop_order(ord);
    Series<T> h = g;
    h.order = ord;
    h.c[0] = T{};
    Series<T> r;
    r.order = ord;
    r.c[0] = f.c[n];
    for (int k = n - 1; k >= 0; --k) {
        r = r * h;
        r.c[0] += f.c[k];
    }
    return r;
}

// Compositional inverse: h with g(h(tau)) = tau, for g with g0 = 0, g1 != 0.
// Coefficients are fixed one order at a time; coefficient k of compose(g,h)
// is g1*h_k plus terms in lower-order coefficients of h.
template <class T>
Series<T> invert(const Series<T>& g) {
    if (lead(g) != 0.0) throw NotInvertible("invert: constant term nonzero");
    if (lead(g.c[1]) == 0.0) throw NotInvertible("invert: vanishing first coefficient");
    const int n = detail::loop_order(g.order);
    Series<T> h;
    h.order = g.order;
    h.c[1] = T(1.0) / g.c[1];
    for (int k = 2; k <= n; ++k) {
        Series<T> comp = compose(g, h);
        h.c[k] = h.c[k] - comp.c[k] / g.c[1];
    }
    return h;
}

namespace detail {
// Composition with a precomputed table d[k] = f^(k)(c0)/k! via Horner.
template <class T>
Series<T> apply_elementary(const Series<T>& s, const std::array<T, kMaxOrder + 1>& d) {
    Series<T> h = s;
    h.c[0] = T{};
    Series<T> r;
    r.order = s.order;
    const int n = loop_order(s.order);
    r.c[0] = d[n];
    for (int k = n - 1; k >= 0; --k) {
        r = r * h;
        r.c[0] += d[k];
    }
    return r;
}
} // namespace detail

template <class T>
Series<T> sqrt(const Series<T>& s) {
    if (lead(s) <= 0.0) throw ZeroConstantTerm("sqrt: non-positive constant term");
    std::array<T, kMaxOrder + 1> d{};
    d[0] = sqrt(s.c[0]);
    for (int k = 1; k <= detail::loop_order(s.order); ++k)
        d[k] = d[k - 1] * ((1.5 - k) / k) / s.c[0];
    return detail::apply_elementary(s, d);
}

template <class T>
Series<T> pow_real(const Series<T>& s, double p) {
    if (lead(s) <= 0.0) throw ZeroConstantTerm("pow_real: non-positive constant term");
    std::array<T, kMaxOrder + 1> d{};
    d[0] = pow_real(s.c[0], p);
    for (int k = 1; k <= detail::loop_order(s.order); ++k)
        d[k] = d[k - 1] * ((p - k + 1.0) / k) / s.c[0];
    return detail::apply_elementary(s, d);
}

template <class T>
Series<T> atan(const Series<T>& s) {
    std::array<T, kMaxOrder + 1> d{};
    d[0] = atan(s.c[0]);
    const int n = detail::loop_order(s.order);
    if (n >= 1) {
        // d/dsigma atan(c0 + sigma) = 1 / (1 + (c0 + sigma)^2), integrated term by term
        Series<T> w;
        w.order = (s.order < 0) ? kAutoOrder : s.order - 1;
        w.c[0] = T(1.0) + s.c[0] * s.c[0];
        w.c[1] = s.c[0] * 2.0;
        w.c[2] = T(1.0);
        if (detail::loop_order(w.order) < 2) {
            w.c[2] = T{};
            if (detail::loop_order(w.order) < 1) w.c[1] = T{};
        }
        Series<T> g = 1.0 / w;
        for (int k = 1; k <= n; ++k) d[k] = g.c[k - 1] / double(k);
    }
    return detail::apply_elementary(s, d);
}

using TaylorScalar = Series<double>;

inline TaylorScalar taylor(std::initializer_list<double> cs) {
    TaylorScalar s;
    s.order = int(cs.size()) - 1;
    if (s.order < 0 || s.order > kMaxOrder) throw OrderExceeded("taylor: bad coefficient count");
    int k = 0;
    for (double v : cs) s.c[k++] = v;
    return s;
}

} // namespace varjet
