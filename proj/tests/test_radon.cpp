#include <cmath>
#include <numbers>

#include "doctest.h"
#include "gt/radon.hpp"

using namespace gt;
using std::numbers::pi;

TEST_CASE("transform of simple densities") {
    CHECK(spherical_radon(SphericalFunction::constant(3, 1.0),
                          Direction::of(unit_axis(3, 2))) ==
          doctest::Approx(2.0 * pi).epsilon(1e-12));
    CHECK(spherical_radon(SphericalFunction::constant(4, 1.0),
                          Direction::of(unit_axis(4, 0))) ==
          doctest::Approx(4.0 * pi).epsilon(1e-12));
    // integrand vanishes on the equator
    SphericalFunction f3{3, [](const Vec& u) { return u[2] * u[2]; }, true};
    CHECK(std::abs(spherical_radon(f3, Direction::of(unit_axis(3, 2)))) < 1e-12);
    // first moment of cos^2 over the great circle
    SphericalFunction f1{3, [](const Vec& u) { return u[0] * u[0]; }, true};
    CHECK(spherical_radon(f1, Direction::of(unit_axis(3, 2))) ==
          doctest::Approx(pi).epsilon(1e-12));
}

TEST_CASE("transform is even in xi") {
    SphericalFunction f{4, [](const Vec& u) { return std::exp(u[0] - 0.3 * u[2]); },
                        false};
    Vec xi = normalized(Vec{1, -1, 0.5, 2});
    double a = spherical_radon(f, Direction::of(xi));
    double b = spherical_radon(f, Direction::of(negated(xi)));
    CHECK(a == b); // bitwise, via canonicalization
}

TEST_CASE("marked-even functions are spot-checked") {
    SphericalFunction bad{3, [](const Vec& u) { return u[2]; }, true};
    CHECK_THROWS_AS(spherical_radon(bad, Direction::of(normalized(Vec{1, 1, 1}))),
                    domain_error);
    CHECK_THROWS_AS(spherical_radon(SphericalFunction::constant(2, 1.0),
                                    Direction::of(unit_axis(2, 0))),
                    domain_error);
}

TEST_CASE("frame independence") {
    SphericalFunction f{3,
                        [](const Vec& u) {
                            return std::cos(3.0 * u[0]) + u[1] * u[1] * u[2] * u[2];
                        },
                        true};
    Vec xi = canonical_sign(normalized(Vec{0.3, -0.7, 0.9}));
    QuadratureConfig cfg;
    auto basis = orthonormal_complement(xi);
    double a = detail::radon_with_basis(f, xi, basis, cfg);
    double b = detail::radon_with_basis(f, xi, detail::rotated_complement(basis), cfg);
    CHECK(a == doctest::Approx(b).epsilon(1e-11));
}

TEST_CASE("duality for atomic measures") {
    auto one = SphericalFunction::constant(3, 1.0);
    auto r1 = radon_duality_check({{unit_axis(3, 2), 1.0}}, one);
    CHECK(r1.lhs == doctest::Approx(2.0 * pi).epsilon(1e-12));
    CHECK(r1.rhs == doctest::Approx(r1.lhs).epsilon(1e-10));

    auto c = SphericalFunction::constant(3, 3.0);
    auto r2 = radon_duality_check({{unit_axis(3, 0), 0.5}, {unit_axis(3, 1), 0.5}}, c);
    CHECK(r2.rhs == doctest::Approx(2.0 * pi * 3.0).epsilon(1e-12));
    CHECK(r2.lhs == doctest::Approx(r2.rhs).epsilon(1e-10));

    SphericalFunction sq{3, [](const Vec& u) { return u[0] * u[0]; }, true};
    auto r3 = radon_duality_check({{unit_axis(3, 2), 1.0}}, sq);
    CHECK(r3.rhs == doctest::Approx(pi).epsilon(1e-12)); // frozen
    CHECK(r3.lhs == doctest::Approx(pi).epsilon(1e-12));

    CHECK_THROWS_AS(radon_duality_check({{unit_axis(3, 2), -0.1}}, one),
                    std::invalid_argument);
}

TEST_CASE("inversion formula on the 3-ball") {
    auto ball = StarBody::ball(3);
    CHECK(inverse_radon_3d(ball, Direction::of(unit_axis(3, 2))) ==
          doctest::Approx(1.0 / (2.0 * pi)).epsilon(1e-10));
    CHECK(inverse_radon_3d(ball.dilated(2.0), Direction::of(unit_axis(3, 0))) ==
          doctest::Approx(1.0 / pi).epsilon(1e-10));
    // ellipsoid code path on the round instance
    CHECK(inverse_radon_3d(StarBody::ellipsoid(3, Vec{1, 1, 1}),
                           Direction::of(normalized(Vec{1, 1, 1}))) ==
          doctest::Approx(1.0 / (2.0 * pi)).epsilon(1e-10));
    CHECK_THROWS_AS(inverse_radon_3d(StarBody::ball(4), Direction::of(unit_axis(4, 0))),
                    domain_error);
}

TEST_CASE("reconstruction closure") {
    for (double r : {1.0, 1.7}) {
        double c = inverse_radon_3d(StarBody::ball(3).dilated(r),
                                    Direction::of(unit_axis(3, 2)));
        double rho = spherical_radon(SphericalFunction::constant(3, c),
                                     Direction::of(normalized(Vec{1, 2, -1})));
        CHECK(rho == doctest::Approx(r).epsilon(1e-9));
    }
}

TEST_CASE("inversion matches the transform of the radial power") {
    auto r = radon_fourier_relation_check(StarBody::ball(3),
                                          Direction::of(unit_axis(3, 2)));
    CHECK(r.lhs == doctest::Approx(4.0 * pi).epsilon(1e-9)); // frozen
    CHECK(r.rhs == doctest::Approx(r.lhs).epsilon(1e-8));

    auto s = radon_fourier_relation_check(StarBody::ball(3).dilated(2.0),
                                          Direction::of(unit_axis(3, 1)));
    CHECK(s.lhs == doctest::Approx(8.0 * pi).epsilon(1e-9));
    CHECK(s.rhs == doctest::Approx(s.lhs).epsilon(1e-8));

    auto e = radon_fourier_relation_check(StarBody::ellipsoid(3, Vec{1.5, 1, 0.8}),
                                          Direction::of(normalized(Vec{1, -1, 2})));
    CHECK(e.rhs == doctest::Approx(e.lhs).epsilon(1e-8));
}
