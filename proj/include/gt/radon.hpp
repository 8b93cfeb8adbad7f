#pragma once

#include <cmath>
#include <functional>
#include <numbers>
#include <stdexcept>
#include <utility>
#include <vector>

#include "gt/body.hpp"
#include "gt/errors.hpp"
#include "gt/fourier.hpp"
#include "gt/quadrature.hpp"
#include "gt/sections.hpp"
#include "gt/sphere.hpp"
#include "gt/vec.hpp"

namespace gt {

// A continuous function on S^{n-1}.  The evenness flag is an assertion by
// the caller; the transform spot-checks it on a few probe points.
struct SphericalFunction {
    int dimension = 0;
    std::function<double(const Vec&)> evaluator;
    bool even = false;

    static SphericalFunction constant(int n, double c) {
        return {n, [c](const Vec&) { return c; }, true};
    }
};

namespace detail {

// basis mixing for frame-independence checks: any rotation of an
// orthonormal basis of xi-perp is again one
inline std::vector<Vec> rotated_complement(const std::vector<Vec>& basis) {
    std::vector<Vec> out = basis;
    if (out.size() >= 2) {
        const double s = std::numbers::sqrt2 / 2.0;
        Vec a = out[0], b = out[1];
        out[0] = add_scaled(scaled(a, s), b, s);
        out[1] = add_scaled(scaled(a, s), b, -s);
    } else if (!out.empty()) {
        out[0] = negated(out[0]);
    }
    return out;
}

template <class Basis>
inline double radon_with_basis(const SphericalFunction& f, const Vec& xi,
                               const Basis& basis, const QuadratureConfig& cfg) {
    const int n = f.dimension;
    auto rule = sphere_rule(n - 2, cfg.sphere_nodes);
    double acc = 0.0;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
        Vec v(static_cast<std::size_t>(n), 0.0);
        for (int j = 0; j + 1 < n; ++j)
            for (int c = 0; c < n; ++c)
                v[static_cast<std::size_t>(c)] +=
                    rule.nodes[i][static_cast<std::size_t>(j)] *
                    basis[static_cast<std::size_t>(j)][static_cast<std::size_t>(c)];
        if (f.even && i < 4) {
            double diff = f.evaluator(v) - f.evaluator(negated(v));
            if (std::abs(diff) > 1e-10)
                throw domain_error("spherical_radon: function marked even is not");
        }
        acc += rule.weights[i] * f.evaluator(v);
    }
    (void)xi;
    return acc;
}

} // namespace detail

// Rf(xi) = integral of f over the great subsphere S^{n-1} cap xi-perp.
inline double spherical_radon(const SphericalFunction& f, const Direction& xi,
                              const QuadratureConfig& cfg = {}) {
    if (f.dimension != xi.dim())
        throw domain_error("spherical_radon: dimension mismatch");
    if (f.dimension < 3)
        throw domain_error("spherical_radon: requires n >= 3");
    Vec u = canonical_sign(xi.coords());
    return detail::radon_with_basis(f, u, orthonormal_complement(u), cfg);
}

struct DualityResult {
    double lhs;
    double rhs;
};

// For an atomic measure mu = sum w_i delta_{xi_i}, <R mu, f> = <mu, Rf> by
// definition; both sides reduce to sum w_i Rf(xi_i).  The two sides are
// evaluated in different frames of each xi-perp, so the check guards frame
// independence of the transform.
inline DualityResult radon_duality_check(
    const std::vector<std::pair<Vec, double>>& mu, const SphericalFunction& f,
    const QuadratureConfig& cfg = {}) {
    DualityResult r{0.0, 0.0};
    for (const auto& [dir, w] : mu) {
        if (w < 0.0)
            throw std::invalid_argument("radon_duality_check: negative atom weight");
        Vec u = canonical_sign(normalized(dir));
        auto basis = orthonormal_complement(u);
        r.rhs += w * detail::radon_with_basis(f, u, basis, cfg);
        r.lhs += w * detail::radon_with_basis(f, u, detail::rotated_complement(basis), cfg);
    }
    return r;
}

// R^{-1} rho_K (xi) = -(1/4 pi^2) int_0^inf A'_xi(z)/z dz for n = 3.
// A'(0) = 0, so the integrand extends continuously with value A''(0).
inline double inverse_radon_3d(const StarBody& body, const Direction& xi,
                               const QuadratureConfig& cfg = {}) {
    if (body.dim() != 3)
        throw domain_error("inverse_radon_3d: only n = 3 is supported");
    auto sf = section_function(body, xi, cfg);
    if (sf.derivative_source() != DerivativeSource::analytic)
        throw unsupported_error("inverse_radon_3d: requires analytic sections");
    const double L = sf.support_end();
    auto g = [&](double z) {
        if (z < 1e-12 * L) return sf.derivative_at_zero(2);
        return sf.derivative(z) / z;
    };
    double integral = integrate_adaptive(g, 0.0, L, cfg).value;
    return -integral / (4.0 * std::numbers::pi * std::numbers::pi);
}

// The n = 3 identity 2^n pi^{n-1} R^{-1} rho = rho-hat: the left side from
// the inversion integral, the right side from the odd-moment transform of
// ||x||^{-1} (k = 1).
inline DualityResult radon_fourier_relation_check(const StarBody& body,
                                                  const Direction& xi,
                                                  const QuadratureConfig& cfg = {}) {
    double lhs = 8.0 * std::numbers::pi * std::numbers::pi *
                 inverse_radon_3d(body, xi, cfg);
    auto sf = section_function(body, xi, cfg);
    double rhs = radial_power_ft_odd(sf, 1, cfg).value;
    return {lhs, rhs};
}

} // namespace gt
