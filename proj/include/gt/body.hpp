#pragma once

#include <cmath>
#include <memory>
#include <numbers>
#include <string>
#include <utility>
#include <vector>

#include "gt/errors.hpp"
#include "gt/quadrature.hpp"
#include "gt/vec.hpp"

namespace gt {

enum class BodyKind { ball, ellipsoid, revolution_quartic, radial_table };

inline std::string to_string(BodyKind k) {
    switch (k) {
        case BodyKind::ball: return "ball";
        case BodyKind::ellipsoid: return "ellipsoid";
        case BodyKind::revolution_quartic: return "revolution-quartic";
        case BodyKind::radial_table: return "radial-table";
    }
    return "?";
}

// Samples of a radial function on S^{n-1} with a symmetrized nearest-cap
// weighted average as the interpolation rule.  Positive samples give a
// positive, even interpolant; no smoothness is claimed, so operations that
// need derivatives reject this kind.
struct RadialTable {
    std::vector<Vec> nodes;    // unit vectors
    std::vector<double> values; // rho at each node, > 0

    double eval(const Vec& u) const {
        if (nodes.empty()) throw domain_error("radial-table: no samples");
        // widen the cap until it holds at least one sample
        for (double cap_cos = 0.95; ; cap_cos -= 0.1) {
            double num = 0.0, den = 0.0;
            for (std::size_t i = 0; i < nodes.size(); ++i) {
                double c = std::abs(dot(u, nodes[i])); // |.| symmetrizes
                if (c > cap_cos) {
                    double w = c - cap_cos;
                    num += w * values[i];
                    den += w;
                }
            }
            if (den > 0.0) return num / den;
            if (cap_cos < -1.0) throw domain_error("radial-table: empty table");
        }
    }
};

// Origin-symmetric star body in R^n.  Immutable after construction; the
// radial evaluator is pure.  `scale` dilates the base kind (rho_{rK} = r rho_K),
// which keeps dilation tests inside the closed-form section formulas.
class StarBody {
public:
    static StarBody ball(int n) {
        StarBody b(n, BodyKind::ball);
        b.support_radius_bound_ = 1.0;
        return b;
    }

    static StarBody ellipsoid(int n, Vec semi_axes) {
        if (static_cast<int>(semi_axes.size()) != n)
            throw domain_error("ellipsoid: need n semi-axes");
        for (double a : semi_axes)
            if (!(a > 0.0)) throw domain_error("ellipsoid: semi-axes must be positive");
        StarBody b(n, BodyKind::ellipsoid);
        b.semi_axes_ = std::move(semi_axes);
        b.support_radius_bound_ = 0.0;
        for (double a : b.semi_axes_)
            b.support_radius_bound_ = std::max(b.support_radius_bound_, a);
        return b;
    }

    // K = {x in R^5 : (sum_{i<=4} x_i^2)^2 + x_5^2
    // + eps x_5^4 <= 1}, the revolution body with profile f_eps.
    static StarBody revolution_quartic(double eps) {
        if (!(eps > 0.0 && eps < 1.0))
            throw domain_error("revolution-quartic: epsilon must be in (0,1)");
        StarBody b(5, BodyKind::revolution_quartic);
        b.epsilon_ = eps;
        b.support_radius_bound_ = 2.0;
        return b;
    }

    static StarBody radial_table(int n, RadialTable table) {
        if (table.nodes.empty()) throw domain_error("radial-table: no samples");
        for (const Vec& u : table.nodes)
            if (static_cast<int>(u.size()) != n)
                throw domain_error("radial-table: sample dimension mismatch");
        StarBody b(n, BodyKind::radial_table);
        double bound = 0.0;
        for (double v : table.values) {
            if (!(v > 0.0)) throw domain_error("radial-table: values must be positive");
            bound = std::max(bound, v);
        }
        b.table_ = std::make_shared<RadialTable>(std::move(table));
        b.support_radius_bound_ = bound;
        return b;
    }

    int dim() const { return n_; }
    BodyKind kind() const { return kind_; }
    double scale() const { return scale_; }
    double epsilon() const { return epsilon_; }
    const Vec& semi_axes() const { return semi_axes_; }
    double support_radius_bound() const { return scale_ * support_radius_bound_; }

    bool is_convex() const { return kind_ != BodyKind::radial_table; }
    bool has_analytic_sections() const { return kind_ != BodyKind::radial_table; }

    StarBody dilated(double r) const {
        if (!(r > 0.0)) throw domain_error("dilated: factor must be positive");
        StarBody b(*this);
        b.scale_ *= r;
        return b;
    }

    // Radial function on the unit sphere: rho_K(u), u in S^{n-1}.
    double radial(const Vec& u_raw) const {
        Vec u = canonical_sign(u_raw); // exact origin symmetry
        double base;
        switch (kind_) {
            case BodyKind::ball:
                base = 1.0;
                break;
            case BodyKind::ellipsoid: {
                double s = 0.0;
                for (std::size_t i = 0; i < u.size(); ++i) {
                    double t = u[i] / semi_axes_[i];
                    s += t * t;
                }
                base = 1.0 / std::sqrt(s);
                break;
            }
            case BodyKind::revolution_quartic: {
                // boundary polynomial along the ray r -> r u, monotone in r
                double c2 = u[4] * u[4];
                double s2 = 1.0 - c2;
                double eps = epsilon_;
                auto g = [&](double r) {
                    double r2 = r * r;
                    return r2 * r2 * (s2 * s2 + eps * c2 * c2) + r2 * c2 - 1.0;
                };
                base = bisect_root(g, 0.0, 2.0, 1e-12);
                break;
            }
            case BodyKind::radial_table:
                base = table_->eval(u);
                break;
        }
        return scale_ * base;
    }

private:
    StarBody(int n, BodyKind kind) : n_(n), kind_(kind) {
        if (n < 2) throw domain_error("StarBody: dimension must be >= 2");
    }

    int n_;
    BodyKind kind_;
    Vec semi_axes_;
    double epsilon_ = 0.0;
    double scale_ = 1.0;
    double support_radius_bound_ = 1.0;
    std::shared_ptr<const RadialTable> table_;
};

// Minkowski functional ||x||_K = |x|_2 / rho_K(x/|x|_2); positive homogeneous.
inline double minkowski_functional(const StarBody& body, const Vec& x) {
    double n = norm2(x);
    if (n == 0.0) throw domain_error("minkowski_functional: zero vector");
    return n / body.radial(scaled(x, 1.0 / n));
}

inline StarBody make_counterexample_body(double eps) {
    return StarBody::revolution_quartic(eps);
}

// Positive root of 1 - a^2 - eps a^4: a_eps^2 = (sqrt(1+4 eps) - 1)/(2 eps).
inline double quartic_profile_root(double eps) {
    return std::sqrt((std::sqrt(1.0 + 4.0 * eps) - 1.0) / (2.0 * eps));
}

inline double quartic_profile(double eps, double x) {
    double v = 1.0 - x * x - eps * x * x * x * x;
    return v > 0.0 ? std::pow(v, 0.25) : 0.0;
}

// Second derivative of f_eps(x) = (1 - x^2 - eps x^4)^{1/4} on (0, a_eps).
inline double quartic_profile_second_derivative(double eps, double x) {
    double u = 1.0 - x * x - eps * std::pow(x, 4);
    double du_quarter = -0.5 * x - eps * x * x * x; // u'/4
    return -(0.5 + 3.0 * eps * x * x) * std::pow(u, -0.75) -
           3.0 * du_quarter * du_quarter * std::pow(u, -1.75);
}

// True iff f_eps'' < 0 on an interior grid of (0, a_eps).
inline bool profile_concavity_check(double eps, int grid) {
    if (!(eps > 0.0 && eps < 1.0)) throw domain_error("profile_concavity_check: eps in (0,1)");
    if (grid < 3) throw domain_error("profile_concavity_check: grid >= 3");
    double a = quartic_profile_root(eps);
    for (int i = 1; i <= grid; ++i) {
        double x = a * i / (grid + 1);
        if (!(quartic_profile_second_derivative(eps, x) < 0.0)) return false;
    }
    return true;
}

} // namespace gt
