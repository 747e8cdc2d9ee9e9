// Signature data for the three-dimensional (pseudo)Euclidean geometry and
// the small metric/star/cross toolbox built on it.  The plane star acts on
// spatial 2-vectors, (star w)_i = eps_{ji} w^j with eps_12 = orientation;
// the 3-space cross product and triple product use the volume form with
// eps_{012} = orientation and produce covariant components.
#pragma once

#include <array>
#include <string>

#include "errors.hpp"

namespace varjet {

struct MetricConfig {
    int eta = +1;         // sign of g_00
    int g11 = +1;         // spatial diagonal
    int g22 = +1;
    int orientation = +1; // sign of eps_12

    bool euclidean() const { return eta > 0 && g11 > 0 && g22 > 0; }
    double g_spatial(int i) const { return i == 0 ? double(g11) : double(g22); }
    double g_full(int a) const { return a == 0 ? double(eta) : g_spatial(a - 1); }

    std::string label() const {
        auto s = [](int v) { return v > 0 ? '+' : '-'; };
        return std::string{s(eta), s(g11), s(g22), s(orientation)};
    }
};

struct GeometryParams {
    double mu = 0.0;
};

template <class T>
using Vec2 = std::array<T, 2>;
template <class T>
using Vec3 = std::array<T, 3>;
template <class T>
using Mat2 = std::array<std::array<T, 2>, 2>;

// --- spatial (2d) operations ---

template <class T>
T sdot(const Vec2<T>& a, const Vec2<T>& b, const MetricConfig& m) {
    return a[0] * b[0] * double(m.g11) + a[1] * b[1] * double(m.g22);
}

template <class T>
Vec2<T> lower2(const Vec2<T>& a, const MetricConfig& m) {
    return {a[0] * double(m.g11), a[1] * double(m.g22)};
}

// (star w)_i = eps_{ji} w^j: contravariant in, covariant out.
template <class T>
Vec2<T> hodge_star(const Vec2<T>& w, const MetricConfig& m) {
    double o = double(m.orientation);
    return {-w[1] * o, w[0] * o};
}

// scalar star of a wedge of 2-vectors: eps_{kl} a^k b^l
template <class T>
T star_wedge(const Vec2<T>& a, const Vec2<T>& b, const MetricConfig& m) {
    return (a[0] * b[1] - a[1] * b[0]) * double(m.orientation);
}

// --- full 3-space operations (index 0 is the time direction) ---

template <class T>
T dot3(const Vec3<T>& a, const Vec3<T>& b, const MetricConfig& m) {
    return a[0] * b[0] * double(m.eta) + a[1] * b[1] * double(m.g11) +
           a[2] * b[2] * double(m.g22);
}

template <class T>
Vec3<T> lower3(const Vec3<T>& a, const MetricConfig& m) {
    return {a[0] * double(m.eta), a[1] * double(m.g11), a[2] * double(m.g22)};
}

// covariant cross product (a x b)_g = eps_{g a b} a^a b^b, eps_{012} = orientation
template <class T>
Vec3<T> cross3(const Vec3<T>& a, const Vec3<T>& b, const MetricConfig& m) {
    double o = double(m.orientation);
    return {(a[1] * b[2] - a[2] * b[1]) * o,
            (a[2] * b[0] - a[0] * b[2]) * o,
            (a[0] * b[1] - a[1] * b[0]) * o};
}

// parallelepipedal product [a, b, c] = eps_{abg} a^a b^b c^g
template <class T>
T triple3(const Vec3<T>& a, const Vec3<T>& b, const Vec3<T>& c, const MetricConfig& m) {
    Vec3<T> axb = cross3(a, b, m);
    return axb[0] * c[0] + axb[1] * c[1] + axb[2] * c[2];
}

// squared norm of a covariant vector (inverse metric contraction; the
// inverse of a +-1 diagonal metric is itself)
template <class T>
T norm2_cov(const Vec3<T>& a, const MetricConfig& m) {
    return a[0] * a[0] * double(m.eta) + a[1] * a[1] * double(m.g11) +
           a[2] * a[2] * double(m.g22);
}

} // namespace varjet
