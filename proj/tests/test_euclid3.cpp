// The concrete (pseudo)Euclidean geometry: star operator, solved
// coefficients, the invariant equation, its Lagrangians, the homogeneous
// family and the invariant momentum.
#include <catch2/catch_amalgamated.hpp>

#include <varjet/varjet.hpp>

using namespace varjet;

namespace {

bool rel_close(double a, double b, double tol) {
    return std::abs(a - b) <= tol * (1.0 + std::abs(a) + std::abs(b));
}

VelocityJet positive_time_jet(SplitMix64& rng, int order) {
    VelocityJet w = sample_velocity_jet(rng, order, 3);
    w.coords[1][0] = std::abs(w.coords[1][0]) + 0.3;
    return w;
}

} // namespace

TEST_CASE("plane star operator") {
    MetricConfig m;
    Vec2<double> w{1.0, 0.0};
    Vec2<double> s = hodge_star(w, m);
    CHECK(s[0] == 0.0);
    CHECK(s[1] == 1.0);

    // star of star is minus the identity in the Euclidean plane
    SplitMix64 rng(2);
    for (int trial = 0; trial < 10; ++trial) {
        Vec2<double> a{rng.uniform(-1, 1), rng.uniform(-1, 1)};
        Vec2<double> ss = hodge_star(hodge_star(a, m), m);
        CHECK(ss[0] == Catch::Approx(-a[0]));
        CHECK(ss[1] == Catch::Approx(-a[1]));
    }

    Vec2<double> z{0.0, 0.0};
    Vec2<double> sz = hodge_star(z, m);
    CHECK(sz[0] == 0.0);
    CHECK(sz[1] == 0.0);

    // orientation flips the sign
    MetricConfig mneg = m;
    mneg.orientation = -1;
    CHECK(hodge_star(w, mneg)[1] == -1.0);
}

TEST_CASE("solved coefficients at zero velocity") {
    MetricConfig m;
    GeometryParams gp{0.8};
    auto fld = invariant_abc(m, gp);
    JetVals<double> p;
    p.t = 0.0;
    p.x = {0.0, 0.0};
    p.v = {{0.0, 0.0}};
    Mat2<double> a = fld.A(p);
    CHECK(a[0][1] == Catch::Approx(1.0));
    CHECK(a[1][0] == Catch::Approx(-1.0));
    Mat2<double> b = fld.B(p);
    CHECK(b[0][0] == Catch::Approx(gp.mu));
    CHECK(b[1][1] == Catch::Approx(gp.mu));
    CHECK(b[0][1] == Catch::Approx(0.0).margin(1e-16));
    Vec2<double> c = fld.C(p);
    CHECK(c[0] == 0.0);
    CHECK(c[1] == 0.0);

    // domain guard
    MetricConfig mp{+1, -1, -1, +1};
    auto fp = invariant_abc(mp, gp);
    JetVals<double> bad = p;
    bad.v = {{1.2, 0.9}};
    CHECK_THROWS_AS(fp.A(bad), DomainError);
}

TEST_CASE("invariant equation closed form") {
    MetricConfig m;
    GeometryParams gp{1.7};

    // with v = v' = 0 only the leading star term survives
    ContactJet j = ContactJet::zero(3, 2);
    j.derivs[2] = {0.4, -0.9};
    std::vector<double> e = ep_residual(j, m, gp);
    Vec2<double> s = hodge_star(Vec2<double>{0.4, -0.9}, m);
    CHECK(e[0] == Catch::Approx(-s[0]));
    CHECK(e[1] == Catch::Approx(-s[1]));

    // equals the assembled affine form
    SplitMix64 rng(7);
    for (int trial = 0; trial < 30; ++trial) {
        ContactJet jj = sample_contact_jet(rng, 3, 2, m);
        std::vector<double> a = assemble_affine(invariant_abc(m, gp), jj);
        std::vector<double> r = ep_residual(jj, m, gp);
        REQUIRE(std::abs(a[0] - r[0]) <= 1e-12);
        REQUIRE(std::abs(a[1] - r[1]) <= 1e-12);
    }
}

TEST_CASE("both Lagrangians produce the invariant equation") {
    GeometryParams gp{0.7};
    for (MetricConfig m : {MetricConfig{+1, +1, +1, +1}, MetricConfig{+1, +1, +1, -1},
                           MetricConfig{+1, -1, -1, +1}}) {
        SplitMix64 rng(23);
        auto l1 = contact_lagrangian_field(1, m, gp);
        auto l2 = contact_lagrangian_field(2, m, gp);
        for (int trial = 0; trial < 25; ++trial) {
            ContactJet j = sample_contact_jet(rng, 4, 2, m);
            std::vector<double> e1 = euler_poisson(l1, j);
            std::vector<double> e2 = euler_poisson(l2, j);
            std::vector<double> r = ep_residual(j, m, gp);
            for (int i = 0; i < 2; ++i) {
                REQUIRE(rel_close(e1[i], r[i], 1e-7));
                REQUIRE(rel_close(e2[i], r[i], 1e-7));
            }
        }
    }
}

TEST_CASE("Lagrangian values and gauge difference") {
    MetricConfig m;
    GeometryParams gp{1.9};

    // at v = v' = 0 only the -mu sqrt(1+V.V) term survives
    ContactJet rest = ContactJet::zero(2, 2);
    CHECK(contact_lagrangian(1, rest, m, gp) == Catch::Approx(-gp.mu));
    CHECK(contact_lagrangian(2, rest, m, gp) == Catch::Approx(-gp.mu));

    // L2 - L1 is the total derivative of the arctan gauge function
    for (MetricConfig mm : {MetricConfig{+1, +1, +1, +1}, MetricConfig{+1, +1, +1, -1}}) {
        SplitMix64 rng(3);
        auto dgauge = total_derivative_field(lagrangian_gauge_field(mm));
        for (int trial = 0; trial < 40; ++trial) {
            ContactJet j = sample_contact_jet(rng, 2, 2, mm);
            double lhs = contact_lagrangian(2, j, mm, gp) - contact_lagrangian(1, j, mm, gp);
            double rhs = dgauge(values_of(j));
            REQUIRE(std::abs(lhs - rhs) <= 1e-10);
        }
    }
}

TEST_CASE("homogeneous residual identities") {
    GeometryParams gp{0.7};

    // hand value: only the leading cross term
    {
        MetricConfig m;
        std::vector<double> e =
            homogeneous_residual({1.0, 0.0, 0.0}, {0.0, 0.0, 0.0}, {0.0, 0.3, -0.8}, m, gp);
        // (uddot x u) with u = e_0: (0, uddot^2, -uddot^1)
        CHECK(e[0] == Catch::Approx(0.0).margin(1e-16));
        CHECK(e[1] == Catch::Approx(-0.8));
        CHECK(e[2] == Catch::Approx(-0.3));
    }

    // vanishing derivatives give zero
    {
        MetricConfig m;
        std::vector<double> e =
            homogeneous_residual({0.9, 0.2, -0.4}, {0.0, 0.0, 0.0}, {0.0, 0.0, 0.0}, m, gp);
        for (double v : e) CHECK(v == Catch::Approx(0.0).margin(1e-16));
    }

    // equals the homogenized contact residual on the u^0 > 0 sheet,
    // for eta = +1 signatures
    for (MetricConfig m : {MetricConfig{+1, +1, +1, +1}, MetricConfig{+1, -1, -1, +1},
                           MetricConfig{+1, +1, +1, -1}}) {
        SplitMix64 rng(5);
        auto ef = ep_source_form(m, gp);
        int used = 0;
        while (used < 30) {
            VelocityJet w = positive_time_jet(rng, 4);
            ContactJet pj = project(w);
            Vec2<double> v{pj.derivs[0][0], pj.derivs[0][1]};
            Vec3<double> u{w.coords[1][0], w.coords[1][1], w.coords[1][2]};
            if (1.0 + sdot(v, v, m) < 0.15 || dot3(u, u, m) < 0.1) continue;
            ++used;
            std::vector<double> lhs = homogeneous_residual(
                u, {w.coords[2][0], w.coords[2][1], w.coords[2][2]},
                {w.coords[3][0], w.coords[3][1], w.coords[3][2]}, m, gp);
            std::vector<double> rhs = homogenize_source(ef, w);
            for (int a = 0; a < 3; ++a) REQUIRE(rel_close(lhs[a], rhs[a], 1e-9));
        }
    }

    CHECK_THROWS_AS(homogeneous_residual({0.0, 0.0, 0.0}, {1, 0, 0}, {0, 0, 0}, MetricConfig{},
                                         gp),
                    NullVelocity);
}

TEST_CASE("homogeneous Lagrangian family") {
    GeometryParams gp{1.1};
    MetricConfig m;
    SplitMix64 rng(9);

    // udot = 0, no gauge: only -mu |u|
    {
        Vec3<double> u{0.6, 0.3, -0.2};
        double val = hom_lagrangian_value(1, u, Vec3<double>{}, m, gp);
        CHECK(val == Catch::Approx(-gp.mu * std::sqrt(dot3(u, u, m))));
    }

    // each member reproduces the homogeneous residual
    for (int beta = 0; beta < 3; ++beta) {
        auto lf = hom_lagrangian_field(beta, m, gp);
        int used = 0;
        while (used < 25) {
            VelocityJet w = positive_time_jet(rng, 4);
            Vec3<double> u{w.coords[1][0], w.coords[1][1], w.coords[1][2]};
            Vec3<double> eb{};
            eb[beta] = 1.0;
            if (std::abs(norm2_cov(cross3(u, eb, m), m)) < 0.05) continue;
            ++used;
            std::vector<double> e = euler_poisson(lf, w);
            std::vector<double> r = homogeneous_residual(
                u, {w.coords[2][0], w.coords[2][1], w.coords[2][2]},
                {w.coords[3][0], w.coords[3][1], w.coords[3][2]}, m, gp);
            for (int a = 0; a < 3; ++a) REQUIRE(rel_close(e[a], r[a], 1e-7));
        }
    }

    // gauge terms are null Lagrangians
    {
        auto gf = gauge_only_field(RatioGauge{}, {0.4, -0.2, 0.9});
        int used = 0;
        while (used < 20) {
            VelocityJet w = positive_time_jet(rng, 4);
            Vec3<double> u{w.coords[1][0], w.coords[1][1], w.coords[1][2]};
            if (dot3(u, u, m) < 0.1) continue;
            ++used;
            std::vector<double> e = euler_poisson(gf, w);
            for (int a = 0; a < 3; ++a) REQUIRE(std::abs(e[a]) <= 1e-8);
        }
    }

    // gauge constraint violation is detected
    {
        auto bad_phi = [](const auto& u) { return u[1] * u[2]; }; // degree 2, not 0
        Vec3<double> u{0.7, 0.2, 0.1};
        CHECK_THROWS_AS(gauge_term_value(bad_phi, u, Vec3<double>{0.1, 0.0, 0.0},
                                         Vec3<double>{}),
                        GaugeViolation);
    }
}

TEST_CASE("finite Euclidean motions map solutions to solutions") {
    // Transform a sampled solution curve by a finite rotation and a finite
    // boost of (t, x)-space, return to graph form through the projection,
    // and check that the residual of the invariant equation stays small.
    MetricConfig m;
    GeometryParams gp{0.7};
    InitState init;
    init.v = {0.1, 0.0};
    init.vp = {0.0, 0.2};
    Trajectory tr = integrate(init, 0.0, 10.0, 1e-11, m, gp, 101);

    // finite rotation in the (x1, x2) plane by a, then a finite boost in the
    // (t, x1) plane by b (the Euclidean boost flow is itself a rotation)
    double a = 0.5, b = 0.35;
    auto rot = [&](const Vec3<double>& y) {
        Vec3<double> r1{y[0], std::cos(a) * y[1] - std::sin(a) * y[2],
                        std::sin(a) * y[1] + std::cos(a) * y[2]};
        return Vec3<double>{std::cos(b) * r1[0] - std::sin(b) * r1[1],
                            std::sin(b) * r1[0] + std::cos(b) * r1[1], r1[2]};
    };

    double worst = 0.0;
    for (size_t k = 0; k < tr.samples.size(); k += 10) {
        const TrajectorySample& s = tr.samples[k];
        VelocityJet w = VelocityJet::zero(3, 3);
        Vec3<double> rows[4] = {{s.t, s.x[0], s.x[1]},
                                {1.0, s.v[0], s.v[1]},
                                {0.0, s.vp[0], s.vp[1]},
                                {0.0, s.vpp[0], s.vpp[1]}};
        for (int r = 0; r < 4; ++r) {
            Vec3<double> moved = rot(rows[r]);
            w.coords[r] = {moved[0], moved[1], moved[2]};
        }
        REQUIRE(std::abs(w.coords[1][0]) > 0.1); // still in the graph chart
        ContactJet j = project(w);
        std::vector<double> e = ep_residual(j, m, gp);
        worst = std::max({worst, std::abs(e[0]), std::abs(e[1])});
    }
    CHECK(worst <= 1e-6);
}

TEST_CASE("invariant momentum") {
    GeometryParams gp{0.7};
    MetricConfig m;

    // hand value
    {
        Vec3<double> p = invariant_momentum({1.0, 0.0, 0.0}, {0.0, 1.0, 0.0}, m, gp);
        CHECK(p[0] == Catch::Approx(gp.mu));
        CHECK(p[1] == Catch::Approx(0.0).margin(1e-16));
        CHECK(p[2] == Catch::Approx(-1.0));
    }

    // udot parallel to u: only the mu term survives
    {
        Vec3<double> u{0.5, 0.4, -0.3};
        Vec3<double> ud{1.0, 0.8, -0.6};
        Vec3<double> p = invariant_momentum(u, ud, m, gp);
        double nu = std::sqrt(dot3(u, u, m));
        for (int a = 0; a < 3; ++a) CHECK(p[a] == Catch::Approx(gp.mu * u[a] / nu).margin(1e-14));
    }

    // D_t P equals the homogeneous residual identically (off shell), via
    // the series lift of the quadratic curve through (u, udot, uddot)
    {
        SplitMix64 rng(21);
        for (MetricConfig mm : {MetricConfig{+1, +1, +1, +1}, MetricConfig{-1, +1, +1, +1},
                                MetricConfig{+1, -1, -1, +1}}) {
            for (int trial = 0; trial < 40; ++trial) {
                VelocityPoint p = sample_velocity_point(rng, mm, 0.9, 0.2);
                using S = Series<double>;
                Vec3<S> u, ud;
                for (int a = 0; a < 3; ++a) {
                    u[a] = S::constant(p.u[a], 1);
                    u[a].c[1] = p.ud[a];
                    ud[a] = S::constant(p.ud[a], 1);
                    ud[a].c[1] = p.udd[a];
                }
                // momentum as a series along the curve
                S uu = dot3(u, u, mm);
                S nu = sqrt(uu);
                Vec3<S> c = cross3(ud, u, mm);
                Vec3<S> ul = lower3(u, mm);
                std::vector<double> r =
                    homogeneous_residual(p.u, p.ud, p.udd, mm, gp);
                for (int a = 0; a < 3; ++a) {
                    S pa = c[a] / (nu * uu) + gp.mu * ul[a] / nu;
                    REQUIRE(std::abs(nth_derivative(pa, 1) - r[a]) <= 1e-10 * (1 + std::abs(r[a])));
                }
            }
        }
    }
}
