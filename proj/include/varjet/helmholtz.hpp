// The coordinate form of the variational (Helmholtz) criterion for a
// source form E of order r:
//
//   residual(s)_ij = dE_i/dv_{s-1}^j
//       - sum_{k=s}^{r} (-1)^k k!/((k-s)! s!) D_t^{k-s} dE_j/dv_{k-1}^i ,
//   0 <= s <= r,  v_{-1} = x.
//
// All r+1 matrices vanish at every jet point iff E is locally variational.
// Each dE_j/dv_{k-1}^i is one dual-seeded evaluation of E along the curve;
// the D_t powers are series coefficients of that same evaluation.
#pragma once

#include <vector>

#include "euler_poisson.hpp"

namespace varjet {

struct MatrixN {
    int n = 0;
    std::vector<double> m; // row-major n*n

    MatrixN() = default;
    explicit MatrixN(int dim) : n(dim), m(dim * dim, 0.0) {}
    double& operator()(int i, int j) { return m[i * n + j]; }
    double operator()(int i, int j) const { return m[i * n + j]; }
    double max_abs() const {
        double r = 0.0;
        for (double v : m) r = std::max(r, std::abs(v));
        return r;
    }
};

template <class E>
std::vector<MatrixN> helmholtz_residuals(const E& src, const ContactJet& j) {
    const int r = src.info.order;
    const int n = src.info.dim;
    if (r > kMaxOrder) throw OrderExceeded("helmholtz: source order above capacity");

    JetVals<double> p = values_of(j);
    // Jet rows beyond j.order are zero; the evaluation is exact at the
    // polynomial jet point with vanishing top coordinates.
    JetVals<Series<double>> curve = curve_values(p, r);
    JetVals<Dual<Series<double>>> lifted = dual_values(curve);

    // g[i][k][jj] = series of dE_jj/dv_{k-1}^i along the curve
    std::vector<std::vector<std::vector<Series<double>>>> g(
        n, std::vector<std::vector<Series<double>>>(r + 1));
    for (int i = 0; i < n; ++i) {
        for (int k = 0; k <= r; ++k) {
            JetVals<Dual<Series<double>>> q = lifted;
            Coord c = (k == 0) ? Coord::pos(i) : Coord::deriv(k - 1, i);
            seed(q, c, Series<double>(1.0, r));
            std::vector<Dual<Series<double>>> val = src(q);
            g[i][k].resize(n);
            for (int jj = 0; jj < n; ++jj) g[i][k][jj] = val[jj].b;
        }
    }

    std::vector<MatrixN> res(r + 1, MatrixN(n));
    for (int s = 0; s <= r; ++s) {
        for (int i = 0; i < n; ++i) {
            for (int jj = 0; jj < n; ++jj) {
                double acc = g[jj][s][i].c[0]; // dE_i/dv_{s-1}^j at the point
                for (int k = s; k <= r; ++k) {
                    // binomial weight k!/((k-s)!s!) times the (k-s)! of D_t^{k-s}
                    double w = kFactorial[k] / kFactorial[s];
                    double term = w * g[i][k][jj].c[k - s];
                    if (k % 2 == 0)
                        acc -= term;
                    else
                        acc += term;
                }
                res[s](i, jj) = acc;
            }
        }
    }
    return res;
}

inline double max_abs(const std::vector<MatrixN>& mats) {
    double r = 0.0;
    for (const MatrixN& m : mats) r = std::max(r, m.max_abs());
    return r;
}

} // namespace varjet
