#pragma once

#include <cmath>
#include <cstddef>
#include <vector>

#include "gt/errors.hpp"

namespace gt {

using Vec = std::vector<double>;

inline double dot(const Vec& a, const Vec& b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline double norm2(const Vec& a) { return std::sqrt(dot(a, a)); }

inline Vec scaled(const Vec& a, double s) {
    Vec r(a);
    for (double& x : r) x *= s;
    return r;
}

inline Vec add_scaled(const Vec& a, const Vec& b, double s) {
    Vec r(a);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] += s * b[i];
    return r;
}

inline Vec negated(const Vec& a) { return scaled(a, -1.0); }

inline Vec normalized(const Vec& a) {
    double n = norm2(a);
    if (n == 0.0) throw domain_error("cannot normalize the zero vector");
    return scaled(a, 1.0 / n);
}

inline Vec unit_axis(int n, int i) {
    Vec e(static_cast<std::size_t>(n), 0.0);
    e[static_cast<std::size_t>(i)] = 1.0;
    return e;
}

// Flip sign so the first nonzero coordinate is positive.  Used wherever a
// result must be exactly even in its direction argument.
inline Vec canonical_sign(Vec u) {
    for (double x : u) {
        if (x > 0.0) return u;
        if (x < 0.0) { for (double& y : u) y = -y; return u; }
    }
    return u;
}

// Unit direction on S^{n-1}.  Norm must already be 1 to within 1e-12; use
// Direction::of() to normalize arbitrary nonzero vectors.
class Direction {
public:
    explicit Direction(Vec coords) : coords_(std::move(coords)) {
        if (coords_.size() < 2)
            throw domain_error("Direction: dimension must be >= 2");
        if (std::abs(norm2(coords_) - 1.0) > 1e-12)
            throw domain_error("Direction: vector is not unit length");
    }

    static Direction of(const Vec& v) { return Direction(normalized(v)); }

    int dim() const { return static_cast<int>(coords_.size()); }
    const Vec& coords() const { return coords_; }
    double operator[](std::size_t i) const { return coords_[i]; }

private:
    Vec coords_;
};

// Orthonormal basis of xi^perp via a Householder reflection mapping xi to
// +/- e_n; deterministic in xi.  Returns n-1 columns.
inline std::vector<Vec> orthonormal_complement(const Vec& xi) {
    const std::size_t n = xi.size();
    Vec u = canonical_sign(normalized(xi));
    // reflector v = u - sign * e_{n-1}, H = I - 2 v v^T / |v|^2 maps e_{n-1} to sign*u
    double sign = (u[n - 1] >= 0.0) ? 1.0 : -1.0;
    Vec v(u);
    v[n - 1] -= sign;
    double vv = dot(v, v);
    std::vector<Vec> basis;
    basis.reserve(n - 1);
    for (std::size_t j = 0; j + 1 < n; ++j) {
        Vec col(n, 0.0);
        col[j] = 1.0;
        if (vv > 1e-24) {
            double c = 2.0 * v[j] / vv;
            for (std::size_t i = 0; i < n; ++i) col[i] -= c * v[i];
        }
        basis.push_back(std::move(col));
    }
    return basis;
}

} // namespace gt
