// Seeded, splittable PRNG and the jet samplers used by the verification
// drivers.  splitmix64 is stable across platforms, which keeps reports
// byte-identical for a given seed.
#pragma once

#include <cstdint>

#include "jet_point.hpp"
#include "metric.hpp"

namespace varjet {

struct SplitMix64 {
    std::uint64_t state;

    explicit SplitMix64(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    // independent child stream
    SplitMix64 split() { return SplitMix64(next() ^ 0x5851f42d4c957f2dull); }

    double uniform() { return double(next() >> 11) * 0x1.0p-53; }
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
};

// Contact jet with all components uniform in [-range, range]; resamples the
// v row until 1 + V.V exceeds `domain_margin`.  The margin keeps identity
// checks away from the domain boundary, where powers of (1+V.V)^{-1}
// amplify roundoff beyond the stated thresholds.
inline ContactJet sample_contact_jet(SplitMix64& rng, int order, int dim, const MetricConfig& m,
                                     double range = 0.9, double domain_margin = 0.15) {
    ContactJet j = ContactJet::zero(order, dim);
    j.t = rng.uniform(-range, range);
    for (int i = 0; i < dim; ++i) j.x[i] = rng.uniform(-range, range);
    for (int s = 0; s < order; ++s)
        for (int i = 0; i < dim; ++i) j.derivs[s][i] = rng.uniform(-range, range);
    if (dim == 2) {
        for (int guard = 0; guard < 1000; ++guard) {
            Vec2<double> v{j.derivs[0][0], j.derivs[0][1]};
            if (1.0 + sdot(v, v, m) > domain_margin) break;
            j.derivs[0][0] = rng.uniform(-range, range);
            j.derivs[0][1] = rng.uniform(-range, range);
        }
    }
    return j;
}

// Velocity jet with |u^0| bounded away from zero.
inline VelocityJet sample_velocity_jet(SplitMix64& rng, int order, int dim, double range = 0.9,
                                       double u0_min = 0.5) {
    VelocityJet w = VelocityJet::zero(order, dim);
    for (int s = 0; s <= order; ++s)
        for (int a = 0; a < dim; ++a) w.coords[s][a] = rng.uniform(-range, range);
    double u0 = rng.uniform(u0_min, range + u0_min);
    w.coords[1][0] = rng.next() % 2 ? u0 : -u0;
    return w;
}

inline ReparamJet sample_reparam(SplitMix64& rng, int order, bool orientation_preserving = true) {
    ReparamJet r;
    r.coeffs.resize(order);
    double c1 = rng.uniform(0.5, 2.0);
    if (!orientation_preserving && rng.next() % 2) c1 = -c1;
    r.coeffs[0] = c1;
    for (int k = 1; k < order; ++k) r.coeffs[k] = rng.uniform(-0.3, 0.3);
    return r;
}

// Random (u, udot, uddot) triple with |u|^2 bounded below, for the
// homogeneous-side identities.
struct VelocityPoint {
    Vec3<double> u, ud, udd;
};

inline VelocityPoint sample_velocity_point(SplitMix64& rng, const MetricConfig& m,
                                           double range = 0.9, double norm_margin = 0.05) {
    VelocityPoint p;
    for (int guard = 0; guard < 1000; ++guard) {
        for (int a = 0; a < 3; ++a) p.u[a] = rng.uniform(-range, range);
        if (dot3(p.u, p.u, m) > norm_margin) break;
    }
    for (int a = 0; a < 3; ++a) {
        p.ud[a] = rng.uniform(-range, range);
        p.udd[a] = rng.uniform(-range, range);
    }
    return p;
}

inline Mat2<double> sample_skew(SplitMix64& rng, double range = 1.0) {
    double w = rng.uniform(-range, range);
    return {{{0.0, w}, {-w, 0.0}}};
}

} // namespace varjet
