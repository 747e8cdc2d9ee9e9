// First-order nilpotent extensions of a coefficient ring.
//
// Dual<T> adjoins one nilpotent perturbation (eps^2 = 0) to T; nesting two
// of them, Dual<Dual<T>>, gives the depth-2 "tower" used for second partial
// derivatives.  Products of perturbations in the same slot vanish by
// construction; the mixed slot-1*slot-2 component survives and carries the
// mixed second derivative.
#pragma once

#include "series.hpp"

namespace varjet {

template <class T>
struct Dual {
    T a{}; // value component
    T b{}; // perturbation coefficient

    Dual() = default;
    explicit Dual(double v) : a(v), b{} {}
    Dual(T va, T vb) : a(std::move(va)), b(std::move(vb)) {}
};

template <class T>
double lead(const Dual<T>& d) {
    return lead(d.a);
}

template <class T>
Dual<T> operator+(const Dual<T>& x, const Dual<T>& y) { return {x.a + y.a, x.b + y.b}; }
template <class T>
Dual<T> operator-(const Dual<T>& x, const Dual<T>& y) { return {x.a - y.a, x.b - y.b}; }
template <class T>
Dual<T> operator-(const Dual<T>& x) { return {-x.a, -x.b}; }
template <class T>
Dual<T> operator*(const Dual<T>& x, const Dual<T>& y) {
    return {x.a * y.a, x.a * y.b + x.b * y.a};
}
template <class T>
Dual<T> operator/(const Dual<T>& x, const Dual<T>& y) {
    T q = x.a / y.a;
    return {q, (x.b - q * y.b) / y.a};
}

template <class T>
Dual<T>& operator+=(Dual<T>& x, const Dual<T>& y) {
    x.a += y.a;
    x.b += y.b;
    return x;
}
template <class T>
Dual<T>& operator-=(Dual<T>& x, const Dual<T>& y) {
    x.a -= y.a;
    x.b -= y.b;
    return x;
}

template <class T>
Dual<T> operator+(const Dual<T>& x, double v) { return {x.a + v, x.b}; }
template <class T>
Dual<T> operator+(double v, const Dual<T>& x) { return x + v; }
template <class T>
Dual<T> operator-(const Dual<T>& x, double v) { return {x.a - v, x.b}; }
template <class T>
Dual<T> operator-(double v, const Dual<T>& x) { return {v - x.a, -x.b}; }
template <class T>
Dual<T> operator*(const Dual<T>& x, double v) { return {x.a * v, x.b * v}; }
template <class T>
Dual<T> operator*(double v, const Dual<T>& x) { return x * v; }
template <class T>
Dual<T> operator/(const Dual<T>& x, double v) { return x * (1.0 / v); }
template <class T>
Dual<T> operator/(double v, const Dual<T>& y) {
    T q = v / y.a;
    return {q, -(q * y.b) / y.a};
}

template <class T>
Dual<T> sqrt(const Dual<T>& x) {
    using std::sqrt;
    T s = sqrt(x.a);
    return {s, x.b / (s * 2.0)};
}

template <class T>
Dual<T> pow_real(const Dual<T>& x, double p) {
    return {pow_real(x.a, p), x.b * (pow_real(x.a, p - 1.0) * p)};
}

template <class T>
Dual<T> atan(const Dual<T>& x) {
    using std::atan;
    return {atan(x.a), x.b / (T(1.0) + x.a * x.a)};
}

// Depth-1 and depth-2 perturbation towers over a base ring.
template <class T>
using Tower1 = Dual<T>;
template <class T>
using Tower2 = Dual<Dual<T>>;

// The tower scalar of the jet machinery: a truncated Taylor base plus up to
// two nilpotent perturbation components.
using TowerScalar = Tower2<TaylorScalar>;

// slot access for depth-2 towers: slot 1 is the inner dual, slot 2 the outer
template <class T>
T& tower_base(Tower2<T>& x) { return x.a.a; }
template <class T>
const T& tower_base(const Tower2<T>& x) { return x.a.a; }
template <class T>
T& tower_slot1(Tower2<T>& x) { return x.a.b; }
template <class T>
const T& tower_slot1(const Tower2<T>& x) { return x.a.b; }
template <class T>
T& tower_slot2(Tower2<T>& x) { return x.b.a; }
template <class T>
const T& tower_slot2(const Tower2<T>& x) { return x.b.a; }
template <class T>
T& tower_mixed(Tower2<T>& x) { return x.b.b; }
template <class T>
const T& tower_mixed(const Tower2<T>& x) { return x.b.b; }

} // namespace varjet
