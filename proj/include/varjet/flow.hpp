// Numerical flow of the invariant equation in graph form, plus the Frenet
// and conserved-momentum diagnostics that verify the helix geometry of the
// solutions.
#pragma once

#include <cmath>
#include <vector>

#include "euclid3.hpp"
#include "ode.hpp"

namespace varjet {

struct TrajectorySample {
    double t;
    Vec2<double> x, v, vp, vpp;
};

struct Trajectory {
    std::vector<TrajectorySample> samples;
    GeometryParams params;
    MetricConfig metric;
    double tol = 0.0;
    long n_steps = 0;
    long n_rhs = 0;
};

struct FrenetData {
    std::vector<double> s;      // arc length
    std::vector<double> kappa1; // first curvature
    std::vector<double> kappa2; // second curvature (signed torsion)
};

struct InitState {
    Vec2<double> x{0.0, 0.0};
    Vec2<double> v{0.0, 0.0};
    Vec2<double> vp{0.0, 0.0};
};

// Integrate the invariant equation, solving A v'' = -K for the top order.
// Emits samples on a uniform grid of `grid` points (cubic Hermite dense
// output); v'' at each sample is re-solved from the affine system.
inline Trajectory integrate(const InitState& init, double t0, double t1, double tol,
                            const MetricConfig& m, const GeometryParams& gp, int grid = 401,
                            double h_fixed = 0.0) {
    if (tol <= 0.0) throw DomainError("integrate: tol must be positive");
    if (grid < 2) throw TooFewSamples("integrate: grid too small");
    auto fld = invariant_abc(m, gp);

    // 1 + V.V > 0 bounds the pseudo domains; the |v| cap detects the graph
    // chart breaking down (tangent turning vertical), which ends mu = 0
    // circle solutions in finite time.
    auto domain_ok = [m](const Vec2<double>& v) {
        return 1.0 + sdot(v, v, m) > 0.0 && v[0] * v[0] + v[1] * v[1] < 1e8;
    };
    if (!domain_ok(init.v)) throw DomainExit("integrate: 1 + V.V <= 0 at initial data");

    OdeRhs rhs = [&](double t, const std::vector<double>& y, std::vector<double>& dy) {
        Vec2<double> x{y[0], y[1]}, v{y[2], y[3]}, vp{y[4], y[5]};
        if (!domain_ok(v)) throw DomainExit("integrate: trajectory left 1 + V.V > 0");
        Vec2<double> vpp = solve_top_order(fld, t, x, v, vp);
        dy = {v[0], v[1], vp[0], vp[1], vpp[0], vpp[1]};
    };

    OdeOptions opt;
    opt.tol = tol;
    opt.h_fixed = h_fixed;
    std::vector<double> y0 = {init.x[0], init.x[1], init.v[0], init.v[1], init.vp[0], init.vp[1]};
    OdeSolution sol = integrate_dopri5(rhs, y0, t0, t1, opt);

    Trajectory tr;
    tr.params = gp;
    tr.metric = m;
    tr.tol = tol;
    tr.n_steps = sol.n_steps;
    tr.n_rhs = sol.n_rhs;
    tr.samples.reserve(grid);
    for (int k = 0; k < grid; ++k) {
        double t = t0 + (t1 - t0) * double(k) / double(grid - 1);
        std::vector<double> y = sol.at(t);
        TrajectorySample s;
        s.t = t;
        s.x = {y[0], y[1]};
        s.v = {y[2], y[3]};
        s.vp = {y[4], y[5]};
        if (!domain_ok(s.v)) throw DomainExit("integrate: dense sample outside domain");
        s.vpp = solve_top_order(fld, t, s.x, s.v, s.vp);
        tr.samples.push_back(s);
    }
    return tr;
}

// Largest residual of the equation over the samples, with v'' taken from
// the stored jets.  Verifies the Trajectory invariant that every emitted
// sample solves the affine system.
inline double trajectory_max_residual(const Trajectory& tr) {
    double worst = 0.0;
    for (const TrajectorySample& s : tr.samples) {
        ContactJet j = ContactJet::zero(3, 2);
        j.t = s.t;
        j.x = {s.x[0], s.x[1]};
        j.derivs = {{s.v[0], s.v[1]}, {s.vp[0], s.vp[1]}, {s.vpp[0], s.vpp[1]}};
        std::vector<double> e = ep_residual(j, tr.metric, tr.params);
        worst = std::max({worst, std::abs(e[0]), std::abs(e[1])});
    }
    return worst;
}

// Frenet curvatures of the embedded curve gamma(t) = (t, x^1, x^2), from
// the stored jet data; Euclidean signature only.
inline FrenetData frenet(const Trajectory& tr, const MetricConfig& m) {
    if (!m.euclidean())
        throw SignatureUnsupported("frenet: diagnostics require Euclidean signature");
    const size_t n = tr.samples.size();
    if (n < 2) throw TooFewSamples("frenet: need at least two samples");

    FrenetData fd;
    fd.s.resize(n);
    fd.kappa1.resize(n);
    fd.kappa2.resize(n);

    std::vector<double> speed(n);
    for (size_t k = 0; k < n; ++k) {
        const TrajectorySample& s = tr.samples[k];
        Vec3<double> g1{1.0, s.v[0], s.v[1]};
        Vec3<double> g2{0.0, s.vp[0], s.vp[1]};
        Vec3<double> g3{0.0, s.vpp[0], s.vpp[1]};
        MetricConfig flat; // plain Euclidean 3-space for the frame
        Vec3<double> c = cross3(g1, g2, flat);
        double cn = std::sqrt(c[0] * c[0] + c[1] * c[1] + c[2] * c[2]);
        double g1n = std::sqrt(1.0 + s.v[0] * s.v[0] + s.v[1] * s.v[1]);
        if (cn < 1e-10) throw DegenerateFrame("frenet: |gamma' x gamma''| ~ 0");
        fd.kappa1[k] = cn / (g1n * g1n * g1n);
        fd.kappa2[k] = triple3(g1, g2, g3, flat) / (cn * cn);
        speed[k] = g1n;
    }

    // arc length by composite Simpson on the uniform grid (trapezoid on a
    // trailing odd interval)
    fd.s[0] = 0.0;
    double dt = tr.samples[1].t - tr.samples[0].t;
    for (size_t k = 1; k < n; ++k) {
        if (k >= 2 && (k % 2 == 0))
            fd.s[k] = fd.s[k - 2] + dt / 3.0 * (speed[k - 2] + 4.0 * speed[k - 1] + speed[k]);
        else
            fd.s[k] = fd.s[k - 1] + 0.5 * dt * (speed[k - 1] + speed[k]);
    }
    // refit odd entries so every sample carries a Simpson-consistent value
    for (size_t k = 3; k + 1 < n; k += 2)
        fd.s[k] = 0.5 * (fd.s[k - 1] + fd.s[k + 1]);
    return fd;
}

struct HelixReport {
    double kappa1_mean = 0.0, kappa1_std = 0.0;
    double kappa2_mean = 0.0, kappa2_std = 0.0;
    double kappa2_target_dev = 0.0; // max | |kappa2| - |mu| |
    bool pass = false;
};

// Remark-1 diagnostics: solutions are helices whose second curvature has
// magnitude |mu|.  The signed torsion of the computed solutions is
// -orientation * mu; the report compares magnitudes.
inline HelixReport helix_diagnostics(const FrenetData& fd, const GeometryParams& gp) {
    const size_t n = fd.kappa1.size();
    if (n < 10) throw TooFewSamples("helix_diagnostics: need at least 10 samples");
    HelixReport r;
    for (size_t k = 0; k < n; ++k) {
        r.kappa1_mean += fd.kappa1[k];
        r.kappa2_mean += fd.kappa2[k];
    }
    r.kappa1_mean /= double(n);
    r.kappa2_mean /= double(n);
    for (size_t k = 0; k < n; ++k) {
        r.kappa1_std += (fd.kappa1[k] - r.kappa1_mean) * (fd.kappa1[k] - r.kappa1_mean);
        r.kappa2_std += (fd.kappa2[k] - r.kappa2_mean) * (fd.kappa2[k] - r.kappa2_mean);
        r.kappa2_target_dev =
            std::max(r.kappa2_target_dev, std::abs(std::abs(fd.kappa2[k]) - std::abs(gp.mu)));
    }
    r.kappa1_std = std::sqrt(r.kappa1_std / double(n));
    r.kappa2_std = std::sqrt(r.kappa2_std / double(n));
    r.pass = (r.kappa1_std <= 1e-5 * (1.0 + r.kappa1_mean)) && (r.kappa2_target_dev <= 1e-5);
    return r;
}

// max_t |P(t) - P(0)| on the homogeneous lift u = (1, v), udot = (0, v').
inline double momentum_drift(const Trajectory& tr, const MetricConfig& m,
                             const GeometryParams& gp) {
    double drift = 0.0;
    Vec3<double> p0{};
    bool first = true;
    for (const TrajectorySample& s : tr.samples) {
        Vec3<double> u{1.0, s.v[0], s.v[1]};
        Vec3<double> ud{0.0, s.vp[0], s.vp[1]};
        Vec3<double> p = invariant_momentum(u, ud, m, gp);
        if (first) {
            p0 = p;
            first = false;
        } else {
            double d = std::sqrt((p[0] - p0[0]) * (p[0] - p0[0]) + (p[1] - p0[1]) * (p[1] - p0[1]) +
                                 (p[2] - p0[2]) * (p[2] - p0[2]));
            drift = std::max(drift, d);
        }
    }
    return drift;
}

} // namespace varjet
