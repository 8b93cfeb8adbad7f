#include <cmath>
#include <numbers>
#include <random>

#include "doctest.h"
#include "gt/quadrature.hpp"
#include "gt/special.hpp"
#include "gt/sphere.hpp"

using namespace gt;
using std::numbers::pi;

TEST_CASE("gamma: classical values") {
    CHECK(gamma_real(0.5) == doctest::Approx(std::sqrt(pi)).epsilon(1e-13));
    CHECK(gamma_real(-0.5) == doctest::Approx(-2.0 * std::sqrt(pi)).epsilon(1e-13));
    CHECK(gamma_real(5.0) == doctest::Approx(24.0).epsilon(1e-13));
    CHECK(gamma_real(1.0) == doctest::Approx(1.0).epsilon(1e-13));
}

TEST_CASE("gamma: precision table against std::tgamma") {
    // documents achieved accuracy on [-30, 30] away from poles
    const double xs[] = {-29.5, -17.25, -8.5,  -3.75, -1.5, -0.25, 0.1,
                         0.75,  1.5,    2.25,  6.5,   12.5, 19.75, 29.5};
    for (double x : xs) {
        double ref = std::tgamma(x);
        CHECK(gamma_real(x) == doctest::Approx(ref).epsilon(1e-12));
    }
}

TEST_CASE("gamma: pole detection carries pole index") {
    CHECK_THROWS_AS(gamma_real(0.0), pole_error);
    try {
        gamma_real(-3.0 + 1e-14);
    } catch (const pole_error& e) {
        CHECK(e.pole_index() == 3);
    }
}

TEST_CASE("gamma: recurrence and reflection on random arguments") {
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> dist(-10.0, 10.0);
    int tested = 0;
    while (tested < 1000) {
        double x = dist(rng);
        if (is_gamma_pole(x, 1e-3) || is_gamma_pole(x + 1.0, 1e-3)) continue;
        double lhs = gamma_real(x + 1.0);
        double rhs = x * gamma_real(x);
        CHECK(lhs == doctest::Approx(rhs).epsilon(1e-11));
        ++tested;
    }
    // Gamma(-q) Gamma(q+1) = -pi / sin(q pi)
    std::uniform_real_distribution<double> qd(-5.0, 5.0);
    tested = 0;
    while (tested < 200) {
        double q = qd(rng);
        if (std::abs(q - std::round(q)) < 1e-2) continue;
        double lhs = gamma_real(-q) * gamma_real(q + 1.0);
        double rhs = -pi / std::sin(q * pi);
        CHECK(lhs == doctest::Approx(rhs).epsilon(1e-10));
        ++tested;
    }
}

TEST_CASE("beta") {
    CHECK(beta_real(1.0, 1.0) == doctest::Approx(1.0).epsilon(1e-13));
    CHECK(beta_real(0.5, 0.5) == doctest::Approx(pi).epsilon(1e-13));
    CHECK(beta_real(2.0, 3.0) == doctest::Approx(1.0 / 12.0).epsilon(1e-13));
    CHECK_THROWS_AS(beta_real(0.0, 1.0), domain_error);
}

TEST_CASE("unit ball volumes") {
    CHECK(unit_ball_volume(1) == doctest::Approx(2.0).epsilon(1e-13));
    CHECK(unit_ball_volume(3) == doctest::Approx(4.0 * pi / 3.0).epsilon(1e-13));
    CHECK(unit_ball_volume(4) == doctest::Approx(pi * pi / 2.0).epsilon(1e-13));
}

TEST_CASE("adaptive quadrature on smooth and singular integrands") {
    QuadratureConfig cfg;
    auto r1 = integrate_adaptive([](double t) { return t * t; }, 0.0, 1.0, cfg);
    CHECK(r1.value == doctest::Approx(1.0 / 3.0).epsilon(1e-12));
    auto r2 = integrate_adaptive([](double z) { return 1.0 - z * z; }, 0.0, 1.0, cfg);
    CHECK(r2.value == doctest::Approx(2.0 / 3.0).epsilon(1e-12));
    // endpoint singularity t^{-1/2}; adaptive bisection resolves it
    QuadratureConfig loose;
    loose.rel_tol = 1e-10;
    loose.abs_tol = 1e-10;
    loose.max_subdivisions = 5000;
    auto r3 = integrate_adaptive([](double t) { return 1.0 / std::sqrt(t); },
                                 1e-300, 1.0, loose);
    CHECK(r3.value == doctest::Approx(2.0).epsilon(1e-8));
}

TEST_CASE("adaptive quadrature reports budget exhaustion") {
    QuadratureConfig cfg;
    cfg.max_subdivisions = 3;
    cfg.rel_tol = 1e-15;
    cfg.abs_tol = 1e-30;
    CHECK_THROWS_AS(integrate_adaptive([](double t) { return std::sin(1.0 / (t + 1e-4)); },
                                       0.0, 1.0, cfg),
                    accuracy_error);
}

TEST_CASE("bisection") {
    auto r1 = bisect_root([](double a) { return 1.0 - a * a - 0.9 * std::pow(a, 4); },
                          0.0, 1.0, 1e-12);
    CHECK(r1 == doctest::Approx(0.7974821).epsilon(1e-6));
    auto r2 = bisect_root([](double a) { return a * a - 2.0 / 3.0; }, 0.0, 1.0, 1e-12);
    CHECK(r2 == doctest::Approx(std::sqrt(2.0 / 3.0)).epsilon(1e-10));
    auto r3 = bisect_root([](double a) { return 1.0 - a * a - 0.5 * std::pow(a, 4); },
                          0.0, 1.0, 1e-12);
    CHECK(r3 == doctest::Approx(0.8555996).epsilon(1e-6));
    CHECK_THROWS_AS(bisect_root([](double a) { return 1.0 + a * a; }, 0.0, 1.0, 1e-12),
                    domain_error);
}

TEST_CASE("sphere rules: areas, moments, symmetry") {
    auto s2 = sphere_rule(2, 5000);
    CHECK(s2.integrate([](const Vec&) { return 1.0; }) ==
          doctest::Approx(4.0 * pi).epsilon(1e-10));
    CHECK(s2.integrate([](const Vec& u) { return u[0] * u[0]; }) ==
          doctest::Approx(4.0 * pi / 3.0).epsilon(1e-10));
    auto s3 = sphere_rule(3, 5000);
    CHECK(s3.integrate([](const Vec&) { return 1.0; }) ==
          doctest::Approx(2.0 * pi * pi).epsilon(1e-10));

    // odd polynomials vanish by antipodal symmetry
    for (int d : {1, 2, 3, 4}) {
        auto r = sphere_rule(d, 3000);
        double odd = r.integrate([](const Vec& u) {
            return u[0] + u[0] * u[0] * u[0] * u[u.size() - 1] * u[u.size() - 1];
        });
        CHECK(std::abs(odd) < 1e-11);
        double area = 0.0;
        for (double w : r.weights) {
            CHECK(w > 0.0);
            area += w;
        }
        CHECK(area == doctest::Approx(sphere_area(d)).epsilon(1e-6));
    }
}

TEST_CASE("circle rule integrates trigonometric polynomials exactly") {
    auto s1 = sphere_rule(1, 64);
    CHECK(s1.integrate([](const Vec& u) { return u[0] * u[0]; }) ==
          doctest::Approx(pi).epsilon(1e-13));
    CHECK(s1.integrate([](const Vec& u) {
        double c = u[0], s = u[1];
        return std::pow(c, 4) + s * s * c * c;
    }) == doctest::Approx(3.0 * pi / 4.0 + pi / 4.0).epsilon(1e-12));
}

TEST_CASE("config validation") {
    QuadratureConfig bad;
    bad.rel_tol = 0.0;
    CHECK_THROWS_AS(bad.validate(), domain_error);
    QuadratureConfig bad2;
    bad2.max_subdivisions = 0;
    CHECK_THROWS_AS(bad2.validate(), domain_error);
}
