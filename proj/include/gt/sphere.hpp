#pragma once

#include <cmath>
#include <numbers>
#include <vector>

#include "gt/errors.hpp"
#include "gt/vec.hpp"

namespace gt {

// Quadrature rule on S^d (the unit sphere in R^{d+1}).  Nodes come in
// antipodal pairs; weights are positive and sum to the surface area.
struct SphereRule {
    int dim = 1; // the d of S^d
    std::vector<Vec> nodes;
    std::vector<double> weights;

    template <class F>
    double integrate(const F& f) const {
        double s = 0.0;
        for (std::size_t i = 0; i < nodes.size(); ++i) s += weights[i] * f(nodes[i]);
        return s;
    }
};

namespace detail {

// Gauss-Legendre nodes/weights on [-1, 1] by Newton iteration.
inline void gauss_legendre(int m, std::vector<double>& x, std::vector<double>& w) {
    x.assign(static_cast<std::size_t>(m), 0.0);
    w.assign(static_cast<std::size_t>(m), 0.0);
    for (int i = 0; i < (m + 1) / 2; ++i) {
        double xi = std::cos(std::numbers::pi * (i + 0.75) / (m + 0.5));
        double pp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = xi;
            for (int k = 2; k <= m; ++k) {
                double p2 = ((2.0 * k - 1.0) * xi * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            pp = m * (xi * p1 - p0) / (xi * xi - 1.0);
            double dx = p1 / pp;
            xi -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        x[static_cast<std::size_t>(i)] = -xi;
        x[static_cast<std::size_t>(m - 1 - i)] = xi;
        double wi = 2.0 / ((1.0 - xi * xi) * pp * pp);
        w[static_cast<std::size_t>(i)] = wi;
        w[static_cast<std::size_t>(m - 1 - i)] = wi;
    }
}

} // namespace detail

// Product rule on S^d with roughly `target_nodes` nodes.
//
//   d = 1    : trapezoidal circle rule (spectrally accurate, exact for
//              trigonometric polynomials of degree < node count);
//   d even   : Gauss-Legendre in t = <u, e_{d+1}> against the polynomial
//              area factor (1 - t^2)^{(d-2)/2}, times a rule on S^{d-1};
//   d odd >=3: periodic trapezoid in the polar angle against the smooth
//              factor sin^{d-1}(psi), times a rule on S^{d-1}.
//
// All branches converge spectrally for smooth integrands, which the section
// engine needs; node sets are antipodally symmetric by construction.
inline SphereRule sphere_rule(int d, int target_nodes) {
    if (d < 1) throw domain_error("sphere_rule: d must be >= 1");
    if (target_nodes < 4) target_nodes = 4;
    SphereRule rule;
    rule.dim = d;
    if (d == 1) {
        int m = target_nodes + (target_nodes % 2); // even, for antipodal pairs
        rule.nodes.reserve(static_cast<std::size_t>(m));
        rule.weights.assign(static_cast<std::size_t>(m),
                            2.0 * std::numbers::pi / m);
        for (int i = 0; i < m; ++i) {
            double th = 2.0 * std::numbers::pi * i / m;
            rule.nodes.push_back(Vec{std::cos(th), std::sin(th)});
        }
        return rule;
    }
    int outer = static_cast<int>(std::ceil(std::pow(double(target_nodes), 1.0 / d)));
    outer = std::max(outer, 16);
    SphereRule sub = sphere_rule(d - 1, std::max(target_nodes / outer, 4));
    if (d % 2 == 0) {
        std::vector<double> x, w;
        detail::gauss_legendre(outer, x, w);
        for (int i = 0; i < outer; ++i) {
            double t = x[static_cast<std::size_t>(i)];
            double s = std::sqrt(std::max(0.0, 1.0 - t * t));
            double area_factor = std::pow(1.0 - t * t, 0.5 * (d - 2));
            for (std::size_t j = 0; j < sub.nodes.size(); ++j) {
                Vec u = scaled(sub.nodes[j], s);
                u.push_back(t);
                rule.nodes.push_back(std::move(u));
                rule.weights.push_back(w[static_cast<std::size_t>(i)] *
                                       area_factor * sub.weights[j]);
            }
        }
    } else {
        int m = outer + (outer % 2);
        for (int i = 0; i < m; ++i) {
            double psi = 2.0 * std::numbers::pi * i / m;
            double s = std::sin(psi), t = std::cos(psi);
            double wf = 0.5 * (2.0 * std::numbers::pi / m) *
                        std::pow(s * s, 0.5 * (d - 1));
            if (wf == 0.0) continue;
            for (std::size_t j = 0; j < sub.nodes.size(); ++j) {
                Vec u = scaled(sub.nodes[j], s);
                u.push_back(t);
                rule.nodes.push_back(std::move(u));
                rule.weights.push_back(wf * sub.weights[j]);
            }
        }
    }
    return rule;
}

} // namespace gt
