// Adaptive Dormand-Prince 5(4) integrator with PI step-size control and
// cubic Hermite dense output (locally fourth-order accurate).
//
// Coefficients from Hairer, Norsett, Wanner, "Solving Ordinary Differential
// Equations I", table 5.2.  The fifth-order solution is propagated; the
// embedded fourth-order result drives the error estimate.
#pragma once

#include <cmath>
#include <functional>
#include <vector>

#include "errors.hpp"

namespace varjet {

struct OdeOptions {
    double tol = 1e-10;        // absolute and relative tolerance
    double h_init = 0.0;       // 0: choose automatically
    double h_min = 1e-14;
    double h_fixed = 0.0;      // > 0: fixed-step mode, no error control
    long max_steps = 2000000;
};

struct OdeStep {
    double t0 = 0.0, t1 = 0.0;
    std::vector<double> y0, y1, f0, f1;
};

struct OdeSolution {
    std::vector<OdeStep> steps;
    long n_steps = 0;
    long n_rejected = 0;
    long n_rhs = 0;

    // cubic Hermite interpolation on the step containing t
    std::vector<double> at(double t) const {
        const OdeStep& s = locate(t);
        double h = s.t1 - s.t0;
        double th = (t - s.t0) / h;
        double h00 = (1 + 2 * th) * (1 - th) * (1 - th);
        double h10 = th * (1 - th) * (1 - th);
        double h01 = th * th * (3 - 2 * th);
        double h11 = th * th * (th - 1);
        size_t n = s.y0.size();
        std::vector<double> y(n);
        for (size_t i = 0; i < n; ++i)
            y[i] = h00 * s.y0[i] + h * h10 * s.f0[i] + h01 * s.y1[i] + h * h11 * s.f1[i];
        return y;
    }

    const OdeStep& locate(double t) const {
        size_t lo = 0, hi = steps.size();
        while (lo + 1 < hi) {
            size_t mid = (lo + hi) / 2;
            if (steps[mid].t0 <= t)
                lo = mid;
            else
                hi = mid;
        }
        return steps[lo];
    }
};

using OdeRhs = std::function<void(double, const std::vector<double>&, std::vector<double>&)>;

inline OdeSolution integrate_dopri5(const OdeRhs& rhs, std::vector<double> y, double t0,
                                    double t1, const OdeOptions& opt) {
    static const double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
    static const double a21 = 1.0 / 5;
    static const double a31 = 3.0 / 40, a32 = 9.0 / 40;
    static const double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
    static const double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187, a53 = 64448.0 / 6561,
                        a54 = -212.0 / 729;
    static const double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247,
                        a64 = 49.0 / 176, a65 = -5103.0 / 18656;
    static const double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192,
                        b5 = -2187.0 / 6784, b6 = 11.0 / 84;
    // error coefficients b - bhat
    static const double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920,
                        e5 = -17253.0 / 339200, e6 = 22.0 / 525, e7 = -1.0 / 40;

    const size_t n = y.size();
    OdeSolution sol;
    std::vector<double> k1(n), k2(n), k3(n), k4(n), k5(n), k6(n), k7(n), yt(n), ynew(n), err(n);

    rhs(t0, y, k1);
    sol.n_rhs = 1;

    double t = t0;
    const bool fixed = opt.h_fixed > 0.0;
    double h = fixed ? opt.h_fixed : (opt.h_init > 0.0 ? opt.h_init : (t1 - t0) * 1e-4);
    double err_prev = 1.0;

    while (t < t1) {
        if (sol.n_steps + sol.n_rejected > opt.max_steps)
            throw StepFailure("integrate: step budget exhausted");
        if (!fixed && h < opt.h_min) throw StepFailure("integrate: step size underflow");
        if (t + h > t1) h = t1 - t;

        auto stage = [&](double tc, const std::vector<double>& yc, std::vector<double>& k) {
            rhs(tc, yc, k);
            ++sol.n_rhs;
        };
        try {
            for (size_t i = 0; i < n; ++i) yt[i] = y[i] + h * a21 * k1[i];
            stage(t + c2 * h, yt, k2);
            for (size_t i = 0; i < n; ++i) yt[i] = y[i] + h * (a31 * k1[i] + a32 * k2[i]);
            stage(t + c3 * h, yt, k3);
            for (size_t i = 0; i < n; ++i)
                yt[i] = y[i] + h * (a41 * k1[i] + a42 * k2[i] + a43 * k3[i]);
            stage(t + c4 * h, yt, k4);
            for (size_t i = 0; i < n; ++i)
                yt[i] = y[i] + h * (a51 * k1[i] + a52 * k2[i] + a53 * k3[i] + a54 * k4[i]);
            stage(t + c5 * h, yt, k5);
            for (size_t i = 0; i < n; ++i)
                yt[i] = y[i] + h * (a61 * k1[i] + a62 * k2[i] + a63 * k3[i] + a64 * k4[i] + a65 * k5[i]);
            stage(t + h, yt, k6);
            for (size_t i = 0; i < n; ++i)
                ynew[i] = y[i] + h * (b1 * k1[i] + b3 * k3[i] + b4 * k4[i] + b5 * k5[i] + b6 * k6[i]);
            stage(t + h, ynew, k7); // FSAL stage

            double errnorm = 0.0;
            if (!fixed) {
                for (size_t i = 0; i < n; ++i) {
                    double e = h * (e1 * k1[i] + e3 * k3[i] + e4 * k4[i] + e5 * k5[i] + e6 * k6[i] +
                                    e7 * k7[i]);
                    double sc = opt.tol + opt.tol * std::max(std::abs(y[i]), std::abs(ynew[i]));
                    errnorm += (e / sc) * (e / sc);
                }
                errnorm = std::sqrt(errnorm / double(n));
            }

            if (fixed || errnorm <= 1.0) {
                OdeStep st;
                st.t0 = t;
                st.t1 = t + h;
                st.y0 = y;
                st.y1 = ynew;
                st.f0 = k1;
                st.f1 = k7;
                sol.steps.push_back(std::move(st));
                t += h;
                y = ynew;
                k1 = k7;
                ++sol.n_steps;
                if (!fixed) {
                    double e = std::max(errnorm, 1e-10);
                    double fac = 0.9 * std::pow(e, -0.7 / 5.0) * std::pow(err_prev, 0.4 / 5.0);
                    fac = std::min(5.0, std::max(0.2, fac));
                    h *= fac;
                    err_prev = e;
                }
            } else {
                ++sol.n_rejected;
                double fac = std::max(0.2, 0.9 * std::pow(errnorm, -0.2));
                h *= fac;
            }
        } catch (const Error&) {
            // a trial stage left the equation's domain; treat it as a
            // rejected step unless the step can no longer shrink
            if (fixed || h <= opt.h_min * 4.0) throw;
            ++sol.n_rejected;
            h *= 0.25;
        }
    }
    return sol;
}

} // namespace varjet
