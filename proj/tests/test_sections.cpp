#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

#include "doctest.h"
#include "gt/sections.hpp"

using namespace gt;
using std::numbers::pi;

static Vec random_unit(std::mt19937& rng, int n) {
    std::normal_distribution<double> g;
    Vec v(static_cast<std::size_t>(n));
    double s;
    do {
        for (double& x : v) x = g(rng);
        s = norm2(v);
    } while (s < 1e-6);
    return scaled(v, 1.0 / s);
}

TEST_CASE("closed-form sections: spec examples") {
    auto ball5 = section_function(StarBody::ball(5), Direction::of(unit_axis(5, 4)));
    CHECK(ball5(0.0) == doctest::Approx(pi * pi / 2.0).epsilon(1e-12));

    auto cx = section_function(make_counterexample_body(0.9),
                               Direction::of(unit_axis(5, 4)));
    CHECK(cx(0.5) ==
          doctest::Approx(0.5 * pi * pi * (1.0 - 0.25 - 0.9 * 0.0625)).epsilon(1e-12));
    CHECK(cx.support_end() == doctest::Approx(quartic_profile_root(0.9)).epsilon(1e-10));

    auto ball3 = section_function(StarBody::ball(3), Direction::of(unit_axis(3, 2)));
    CHECK(ball3(0.6) == doctest::Approx(pi * 0.64).epsilon(1e-12));
}

TEST_CASE("numerical engine cross-checks the ball closed form") {
    QuadratureConfig cfg;
    // route the ball through the engine by disguising nothing: build the
    // engine state directly on the quartic machinery is not possible, so use
    // an off-axis quartic direction further below; here compare engine
    // ellipsoid handling instead via the generic path on a near-ball.
    auto body = make_counterexample_body(0.5);
    Vec xi_axis = unit_axis(5, 4);
    auto analytic = section_function(body, Direction::of(xi_axis), cfg);
    cfg.sphere_nodes = 40000;
    Vec tilt = normalized(Vec{1e-4, 0, 0, 0, 1}); // forces the numeric engine
    auto numeric = section_function(body, Direction::of(tilt), cfg);
    for (double z : {0.0, 0.2, 0.45, 0.7}) {
        CHECK(numeric(z) == doctest::Approx(analytic(z)).epsilon(1e-6));
    }
    CHECK(numeric.derivative_source() == DerivativeSource::finite_difference);
    CHECK(analytic.derivative_source() == DerivativeSource::analytic);
}

TEST_CASE("numerical engine matches analytic ellipsoids and balls") {
    // sections module invariant: 1e-6 relative at 20 z-values, n in {3,4,5}.
    // The engine only sees convex kinds; compare at generic directions by
    // rebuilding the analytic value from the power-profile formula.
    std::mt19937 rng(17);
    for (int n : {3, 4, 5}) {
        QuadratureConfig cfg;
        cfg.sphere_nodes = (n == 5) ? 40000 : (n == 4 ? 15000 : 5000);
        Vec axes(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) axes[static_cast<std::size_t>(i)] = 0.8 + 0.3 * i;
        auto body = StarBody::ellipsoid(n, axes);
        Vec xi = random_unit(rng, n);
        auto sf = section_function(body, Direction::of(xi), cfg);

        // independent engine evaluation of the same sections
        auto rule = sphere_rule(n - 2, cfg.sphere_nodes);
        auto basis = orthonormal_complement(xi);
        double rho_xi = body.radial(normalized(xi));
        for (int i = 0; i < 20; ++i) {
            double z = rho_xi * 0.95 * i / 19.0;
            Vec center = scaled(normalized(xi), z);
            double acc = 0.0;
            for (std::size_t k = 0; k < rule.nodes.size(); ++k) {
                Vec v(static_cast<std::size_t>(n), 0.0);
                for (int j = 0; j + 1 < n; ++j)
                    for (int c = 0; c < n; ++c)
                        v[static_cast<std::size_t>(c)] +=
                            rule.nodes[k][static_cast<std::size_t>(j)] *
                            basis[static_cast<std::size_t>(j)][static_cast<std::size_t>(c)];
                auto g = [&](double r) {
                    return detail::boundary_excess(body, add_scaled(center, v, r));
                };
                double r = bisect_root(g, 0.0, 2.0 * body.support_radius_bound(), 1e-12);
                acc += rule.weights[k] * std::pow(r, n - 1);
            }
            double numeric = acc / (n - 1);
            CHECK(numeric == doctest::Approx(sf(z)).epsilon(1e-6));
        }
    }
}

TEST_CASE("derivatives at zero") {
    auto ball4 = section_function(StarBody::ball(4), Direction::of(unit_axis(4, 0)));
    CHECK(section_derivative_at_zero(ball4, 2) == doctest::Approx(-4.0 * pi).epsilon(1e-12));
    CHECK(section_derivative_at_zero(ball4, 1) == 0.0);
    CHECK(section_derivative_at_zero(ball4, 3) == 0.0);

    for (double eps : {0.2, 0.9}) {
        auto cx = section_function(make_counterexample_body(eps),
                                   Direction::of(unit_axis(5, 4)));
        CHECK(section_derivative_at_zero(cx, 2) == doctest::Approx(-pi * pi).epsilon(1e-12));
        CHECK(section_derivative_at_zero(cx, 4) ==
              doctest::Approx(-12.0 * pi * pi * eps).epsilon(1e-12));
    }
}

TEST_CASE("finite-difference derivatives agree with closed forms") {
    QuadratureConfig cfg;
    cfg.sphere_nodes = 40000;
    auto body = make_counterexample_body(0.8);
    Vec tilt = normalized(Vec{1e-4, 0, 0, 0, 1});
    auto sf = section_function(body, Direction::of(tilt), cfg);
    CHECK(sf.derivative_at_zero(0) == doctest::Approx(pi * pi / 2.0).epsilon(1e-7));
    CHECK(sf.derivative_at_zero(2) == doctest::Approx(-pi * pi).epsilon(1e-5));
    CHECK(sf.derivative_at_zero(4) ==
          doctest::Approx(-12.0 * pi * pi * 0.8).epsilon(1e-3));
    CHECK_THROWS_AS(sf.derivative_at_zero(6), unsupported_error);
}

TEST_CASE("scaling relation for non-unit xi") {
    auto ball = StarBody::ball(3);
    CHECK(section_scaling_check(ball, Vec{0, 0, 2}, 0.0) ==
          doctest::Approx(0.5 * pi).epsilon(1e-12));
    CHECK(section_scaling_check(ball, Vec{0, 0, 1}, 0.0) ==
          doctest::Approx(pi).epsilon(1e-12));
    CHECK(section_scaling_check(ball, Vec{0, 0, 2}, 1.0) ==
          doctest::Approx(0.5 * pi * 0.75).epsilon(1e-12));
    CHECK_THROWS_AS(section_scaling_check(ball, Vec{0, 0, 0}, 0.0), domain_error);
}

TEST_CASE("log-concavity and monotonicity of convex sections") {
    std::mt19937 rng(23);
    std::vector<StarBody> bodies = {StarBody::ball(4),
                                    StarBody::ellipsoid(4, Vec{1, 1.5, 0.7, 2}),
                                    make_counterexample_body(0.9)};
    for (const auto& body : bodies) {
        auto sf = section_function(body, Direction::of(unit_axis(body.dim(),
                                                                body.dim() - 1)));
        double end = sf.support_end();
        std::uniform_real_distribution<double> zd(0.0, end * 0.999);
        for (int t = 0; t < 200; ++t) {
            double z1 = zd(rng), z2 = zd(rng);
            double lam = std::uniform_real_distribution<double>(0.0, 1.0)(rng);
            double lhs = sf(lam * z1 + (1.0 - lam) * z2);
            double rhs = std::pow(sf(z1), lam) * std::pow(sf(z2), 1.0 - lam);
            CHECK(lhs >= rhs - 1e-8);
        }
        CHECK(sf.derivative_at_zero(2) <= 1e-8);
        // non-increasing on [0, end]
        double prev = sf(0.0);
        for (int i = 1; i <= 40; ++i) {
            double cur = sf(end * i / 40.0);
            CHECK(cur <= prev + 1e-12);
            prev = cur;
        }
    }
}

TEST_CASE("ellipsoid closed form validated against the engine") {
    // the arbitrary-xi ellipsoid formula is derived, not from the source
    // theorems; cross-check it on oblique directions
    QuadratureConfig cfg;
    auto body = StarBody::ellipsoid(3, Vec{2, 1, 1});
    Vec xi = normalized(Vec{1, 1, 1});
    auto sf = section_function(body, Direction::of(xi), cfg);
    auto basis = orthonormal_complement(xi);
    auto rule = sphere_rule(1, 4096);
    double rho_xi = body.radial(xi);
    for (double frac : {0.0, 0.3, 0.8}) {
        double z = frac * rho_xi * 0.98;
        Vec center = scaled(xi, z);
        double acc = 0.0;
        for (std::size_t k = 0; k < rule.nodes.size(); ++k) {
            Vec v(3, 0.0);
            for (int j = 0; j < 2; ++j)
                for (int c = 0; c < 3; ++c)
                    v[static_cast<std::size_t>(c)] +=
                        rule.nodes[k][static_cast<std::size_t>(j)] *
                        basis[static_cast<std::size_t>(j)][static_cast<std::size_t>(c)];
            auto g = [&](double r) {
                return detail::boundary_excess(body, add_scaled(center, v, r));
            };
            acc += rule.weights[k] * std::pow(bisect_root(g, 0.0, 5.0, 1e-13), 2);
        }
        CHECK(acc / 2.0 == doctest::Approx(sf(z)).epsilon(1e-8));
    }
}

TEST_CASE("radial-table bodies get no sections") {
    RadialTable t;
    auto rule = sphere_rule(2, 100);
    for (const auto& u : rule.nodes) {
        t.nodes.push_back(u);
        t.values.push_back(1.0);
    }
    auto body = StarBody::radial_table(3, t);
    CHECK_THROWS_AS(section_function(body, Direction::of(unit_axis(3, 2))),
                    unsupported_error);
}

TEST_CASE("csv emitter") {
    auto sf = section_function(StarBody::ball(3), Direction::of(unit_axis(3, 2)));
    std::ostringstream os;
    write_section_csv(os, sf, {0.0, 0.5});
    auto text = os.str();
    CHECK(text.rfind("z,A\n", 0) == 0);
    CHECK(text.find("3.1415926535897931e+00") != std::string::npos);
}
