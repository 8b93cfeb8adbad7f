#pragma once

#include <cmath>
#include <memory>
#include <numbers>
#include <ostream>
#include <utility>
#include <vector>

#include "gt/body.hpp"
#include "gt/csv.hpp"
#include "gt/errors.hpp"
#include "gt/quadrature.hpp"
#include "gt/special.hpp"
#include "gt/sphere.hpp"
#include "gt/vec.hpp"

namespace gt {

enum class DerivativeSource { analytic, finite_difference };

namespace detail {

// Signed boundary excess for the convex kinds: negative strictly inside,
// zero on the boundary, positive outside, convex along every ray.  Lets the
// section engine bisect without nested gauge evaluations.
inline double boundary_excess(const StarBody& body, const Vec& x_raw) {
    double s = body.scale();
    Vec x = (s == 1.0) ? x_raw : scaled(x_raw, 1.0 / s);
    switch (body.kind()) {
        case BodyKind::ball:
            return dot(x, x) - 1.0;
        case BodyKind::ellipsoid: {
            double v = 0.0;
            for (std::size_t i = 0; i < x.size(); ++i) {
                double t = x[i] / body.semi_axes()[i];
                v += t * t;
            }
            return v - 1.0;
        }
        case BodyKind::revolution_quartic: {
            double s2 = x[0] * x[0] + x[1] * x[1] + x[2] * x[2] + x[3] * x[3];
            return s2 * s2 + x[4] * x[4] +
                   body.epsilon() * std::pow(x[4], 4) - 1.0;
        }
        case BodyKind::radial_table:
            break;
    }
    throw unsupported_error("boundary_excess: non-convex body");
}

} // namespace detail

// The map z >= 0 |-> A_xi(z) = vol_{n-1}(K cap {<x,xi> = z}) for a fixed
// body and direction.  Immutable; evaluation is pure.
class SectionFunction {
public:
    double operator()(double z) const {
        z = std::abs(z); // A is even
        if (z > support_end_) return 0.0;
        switch (form_) {
            case Form::power_profile: {
                double u = 1.0 - (z / w_) * (z / w_);
                return u > 0.0 ? amp_ * std::pow(u, p_) : 0.0;
            }
            case Form::quartic_axis: {
                double s2 = s_ * s_;
                double v = s2 * s2 - s2 * z * z - eps_ * std::pow(z, 4);
                return v > 0.0 ? 0.5 * std::numbers::pi * std::numbers::pi * v : 0.0;
            }
            case Form::numeric:
                return numeric_eval(z);
        }
        return 0.0;
    }

    // d^k A / dz^k at 0.  Odd orders are exactly 0 (A is even).
    double derivative_at_zero(int k) const {
        if (k < 0) throw domain_error("derivative order must be >= 0");
        if (k % 2 == 1) return 0.0;
        int j = k / 2;
        if (j > max_taylor())
            throw unsupported_error(
                "derivative order beyond what the finite-difference path supports");
        double f = 1.0;
        for (int i = 2; i <= k; ++i) f *= i;
        return taylor_coeff(j) * f;
    }

    // Coefficient of z^{2j} in the even Taylor expansion of A at 0.
    double taylor_coeff(int j) const {
        switch (form_) {
            case Form::power_profile:
                return amp_ * binom_real(p_, j) * ((j % 2) ? -1.0 : 1.0) *
                       std::pow(w_, -2.0 * j);
            case Form::quartic_axis: {
                double h = 0.5 * std::numbers::pi * std::numbers::pi;
                if (j == 0) return h * std::pow(s_, 4);
                if (j == 1) return -h * s_ * s_;
                if (j == 2) return -h * eps_;
                return 0.0;
            }
            case Form::numeric:
                if (j < 0 || j > 2)
                    throw unsupported_error("finite differences support orders <= 4");
                return fd_taylor_[static_cast<std::size_t>(j)];
        }
        return 0.0;
    }

    // Highest j for which taylor_coeff(j) is trustworthy.
    int max_taylor() const { return form_ == Form::numeric ? 2 : 36; }

    // A'(z); analytic kinds only.
    double derivative(double z) const {
        z = std::abs(z);
        if (z >= support_end_) return 0.0;
        switch (form_) {
            case Form::power_profile: {
                double u = 1.0 - (z / w_) * (z / w_);
                if (u <= 0.0) return 0.0;
                return amp_ * p_ * std::pow(u, p_ - 1.0) * (-2.0 * z / (w_ * w_));
            }
            case Form::quartic_axis:
                return 0.5 * std::numbers::pi * std::numbers::pi *
                       (-2.0 * s_ * s_ * z - 4.0 * eps_ * std::pow(z, 3));
            case Form::numeric:
                throw unsupported_error("A' is only available for analytic sections");
        }
        return 0.0;
    }

    double support_end() const { return support_end_; }
    const StarBody& body() const { return body_; }
    const Vec& xi() const { return xi_; }
    DerivativeSource derivative_source() const {
        return form_ == Form::numeric ? DerivativeSource::finite_difference
                                      : DerivativeSource::analytic;
    }

private:
    enum class Form { power_profile, quartic_axis, numeric };

    friend SectionFunction section_function(const StarBody&, const Direction&,
                                            const QuadratureConfig&);

    SectionFunction(StarBody body, Vec xi)
        : body_(std::move(body)), xi_(std::move(xi)) {}

    double numeric_eval(double z) const {
        // slice center z*xi must be interior for ray bisection
        if (z > 0.0 && minkowski_functional(body_, scaled(xi_, z)) >= 1.0)
            return 0.0;
        const int n = body_.dim();
        const double hi = 2.0 * body_.support_radius_bound();
        double acc = 0.0;
        for (std::size_t i = 0; i < rule_->nodes.size(); ++i) {
            Vec v(static_cast<std::size_t>(n), 0.0);
            for (int j = 0; j + 1 < n; ++j)
                for (int c = 0; c < n; ++c)
                    v[static_cast<std::size_t>(c)] +=
                        rule_->nodes[i][static_cast<std::size_t>(j)] *
                        basis_[static_cast<std::size_t>(j)][static_cast<std::size_t>(c)];
            auto g = [&](double r) {
                return detail::boundary_excess(body_, add_scaled(scaled(xi_, z), v, r));
            };
            double r = bisect_root(g, 0.0, hi, 1e-12);
            acc += rule_->weights[i] * std::pow(r, n - 1);
        }
        return acc / (n - 1);
    }

    StarBody body_;
    Vec xi_;
    Form form_ = Form::numeric;
    double support_end_ = 0.0;
    // power_profile: A(z) = amp * (1 - (z/w)^2)_+^p   (balls and ellipsoids)
    double amp_ = 0.0, w_ = 1.0, p_ = 0.0;
    // quartic_axis: A(z) = (pi^2/2)(s^4 - s^2 z^2 - eps z^4)_+ on [0, s a_eps]
    double eps_ = 0.0, s_ = 1.0;
    // numeric engine state
    std::shared_ptr<const SphereRule> rule_;
    std::vector<Vec> basis_;
    double fd_taylor_[3] = {0.0, 0.0, 0.0};
};

namespace detail {

// 4-level Richardson extrapolation of a central-difference estimate D(h)
// with an error expansion in powers of h^2.
template <class D>
inline double richardson4(const D& d, double h0) {
    double t[4][4];
    for (int i = 0; i < 4; ++i) {
        t[i][0] = d(h0 / std::pow(2.0, i));
        for (int j = 1; j <= i; ++j) {
            double f = std::pow(4.0, j);
            t[i][j] = (f * t[i][j - 1] - t[i - 1][j - 1]) / (f - 1.0);
        }
    }
    return t[3][3];
}

} // namespace detail

// Builds the section function, preferring closed forms: balls and
// axis-aligned ellipsoids for arbitrary xi, the revolution-quartic body for
// xi = +-e_5.  Everything else goes through the convex ray-bisection engine.
inline SectionFunction section_function(const StarBody& body, const Direction& xi,
                                        const QuadratureConfig& cfg = {}) {
    if (body.dim() != xi.dim())
        throw domain_error("section_function: dimension mismatch");
    const int n = body.dim();
    SectionFunction sf(body, canonical_sign(xi.coords()));

    if (body.kind() == BodyKind::ball || body.kind() == BodyKind::ellipsoid) {
        Vec axes(static_cast<std::size_t>(n), body.scale());
        if (body.kind() == BodyKind::ellipsoid)
            for (int i = 0; i < n; ++i)
                axes[static_cast<std::size_t>(i)] =
                    body.scale() * body.semi_axes()[static_cast<std::size_t>(i)];
        double prod = 1.0, w2 = 0.0;
        for (int i = 0; i < n; ++i) {
            prod *= axes[static_cast<std::size_t>(i)];
            double t = axes[static_cast<std::size_t>(i)] * sf.xi_[static_cast<std::size_t>(i)];
            w2 += t * t;
        }
        double w = std::sqrt(w2);
        sf.form_ = SectionFunction::Form::power_profile;
        sf.p_ = 0.5 * (n - 1);
        sf.w_ = w;
        sf.amp_ = unit_ball_volume(n - 1) * prod / w;
        sf.support_end_ = w;
        return sf;
    }
    if (body.kind() == BodyKind::revolution_quartic &&
        std::abs(std::abs(sf.xi_[4]) - 1.0) < 1e-12) {
        sf.form_ = SectionFunction::Form::quartic_axis;
        sf.eps_ = body.epsilon();
        sf.s_ = body.scale();
        sf.support_end_ = body.scale() * quartic_profile_root(body.epsilon());
        return sf;
    }
    if (!body.is_convex())
        throw unsupported_error(
            "numerical section engine requires a convex body kind");

    sf.form_ = SectionFunction::Form::numeric;
    sf.rule_ = std::make_shared<SphereRule>(sphere_rule(n - 2, cfg.sphere_nodes));
    sf.basis_ = orthonormal_complement(sf.xi_);

    // support estimate from radial samples, refined by bisection on A > 0
    auto probe = sphere_rule(n - 1, std::min(cfg.sphere_nodes, 2000));
    double est = 0.0;
    for (const Vec& u : probe.nodes)
        est = std::max(est, body.radial(u) * std::abs(dot(u, sf.xi_)));
    sf.support_end_ = 2.0 * body.support_radius_bound(); // engine usable during refine
    double lo = 0.0, hi = std::min(1.10 * est, 1.0001 * body.support_radius_bound());
    while (sf.numeric_eval(hi) > 0.0) hi *= 1.05;
    sf.support_end_ = bisect_root(
        [&](double z) { return sf.numeric_eval(z) > 0.0 ? -1.0 : 1.0; }, lo, hi, 1e-10);

    // central differences with Richardson extrapolation on the even extension
    double h0 = sf.support_end_ * 1e-2;
    double a0 = sf.numeric_eval(0.0);
    sf.fd_taylor_[0] = a0;
    double d2 = detail::richardson4(
        [&](double h) { return 2.0 * (sf.numeric_eval(h) - a0) / (h * h); }, h0);
    sf.fd_taylor_[1] = 0.5 * d2;
    // the 4th difference divides by h^4; a larger base step keeps rounding
    // noise below the Richardson truncation gain
    double d4 = detail::richardson4(
        [&](double h) {
            return (2.0 * sf.numeric_eval(2.0 * h) - 8.0 * sf.numeric_eval(h) + 6.0 * a0) /
                   std::pow(h, 4);
        },
        5.0 * h0);
    sf.fd_taylor_[2] = d4 / 24.0;
    return sf;
}

inline double section_derivative_at_zero(const SectionFunction& sf, int k) {
    return sf.derivative_at_zero(k);
}

// A_xi(z) for non-unit xi via the Radon scaling
// A_xi(z) = (1/|xi|_2) A_{xi/|xi|_2}(z / |xi|_2).
inline double section_scaling_check(const StarBody& body, const Vec& xi_raw, double z,
                                    const QuadratureConfig& cfg = {}) {
    double m = norm2(xi_raw);
    if (m == 0.0) throw domain_error("section_scaling_check: zero vector");
    auto sf = section_function(body, Direction::of(xi_raw), cfg);
    return sf(z / m) / m;
}

// CSV emitter, columns `z, A`, 17 significant digits.
inline void write_section_csv(std::ostream& os, const SectionFunction& sf,
                              const std::vector<double>& zs) {
    os << "z,A\n";
    for (double z : zs) os << num17(z) << "," << num17(sf(z)) << "\n";
}

} // namespace gt
