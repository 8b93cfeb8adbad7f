#pragma once

#include <algorithm>
#include <cmath>
#include <queue>
#include <vector>

#include "gt/errors.hpp"

namespace gt {

// Tolerances and budgets shared by all numerical operations.
struct QuadratureConfig {
    double rel_tol = 1e-9;
    double abs_tol = 1e-12;
    int max_subdivisions = 2000;
    int sphere_nodes = 5000;

    void validate() const {
        if (rel_tol <= 0.0 || abs_tol <= 0.0)
            throw domain_error("QuadratureConfig: tolerances must be positive");
        if (max_subdivisions < 1)
            throw domain_error("QuadratureConfig: max_subdivisions must be >= 1");
    }
};

struct IntegralResult {
    double value;
    double err_est;
};

namespace detail {

// Gauss 7 / Kronrod 15 nodes and weights on [-1, 1].
struct GK15 {
    static constexpr double xk[8] = {
        0.000000000000000, 0.207784955007898, 0.405845151377397,
        0.586087235467691, 0.741531185599394, 0.864864423359769,
        0.949107912342759, 0.991455371120813};
    static constexpr double wk[8] = {
        0.209482141084728, 0.204432940075298, 0.190350578064785,
        0.169004726639267, 0.140653259715525, 0.104790010322250,
        0.063092092629979, 0.022935322010529};
    static constexpr double wg[4] = {
        0.417959183673469, 0.381830050505119, 0.279705391489277,
        0.129484966168870};
};

template <class F>
inline IntegralResult gk15(const F& f, double a, double b) {
    const double c = 0.5 * (a + b), h = 0.5 * (b - a);
    double fc = f(c);
    double k15 = GK15::wk[0] * fc;
    double g7 = GK15::wg[0] * fc;
    for (int i = 1; i < 8; ++i) {
        double dx = h * GK15::xk[i];
        double s = f(c + dx) + f(c - dx);
        k15 += GK15::wk[i] * s;
        if (i % 2 == 0) g7 += GK15::wg[i / 2] * s;
    }
    k15 *= h;
    g7 *= h;
    // |G7 - K15| overestimates the K15 error on resolved segments and is a
    // reliable refinement driver on unresolved ones.
    return {k15, std::abs(k15 - g7)};
}

struct Segment {
    double a, b, value, err;
    bool operator<(const Segment& o) const { return err < o.err; }
};

} // namespace detail

// Globally adaptive Gauss-Kronrod integration on a finite interval.
// Throws accuracy_error (carrying the partial value and estimate) when the
// subdivision budget runs out before the tolerance is met.
template <class F>
inline IntegralResult integrate_adaptive(const F& f, double a, double b,
                                         const QuadratureConfig& cfg = {}) {
    cfg.validate();
    if (!(a < b)) throw domain_error("integrate_adaptive: requires a < b");
    std::priority_queue<detail::Segment> heap;
    auto first = detail::gk15(f, a, b);
    heap.push({a, b, first.value, first.err_est});
    double total = first.value, total_err = first.err_est;
    int used = 1;
    while (total_err > std::max(cfg.rel_tol * std::abs(total), cfg.abs_tol)) {
        if (used >= cfg.max_subdivisions)
            throw accuracy_error("integrate_adaptive: subdivision budget exhausted",
                                 total, total_err);
        detail::Segment s = heap.top();
        heap.pop();
        double m = 0.5 * (s.a + s.b);
        if (m <= s.a || m >= s.b) {
            // interval cannot be split further in double precision
            heap.push({s.a, s.b, s.value, 0.0});
            total_err -= s.err;
            continue;
        }
        auto l = detail::gk15(f, s.a, m);
        auto r = detail::gk15(f, m, s.b);
        total += l.value + r.value - s.value;
        total_err += l.err_est + r.err_est - s.err;
        heap.push({s.a, m, l.value, l.err_est});
        heap.push({m, s.b, r.value, r.err_est});
        ++used;
    }
    return {total, total_err};
}

// Bisection to absolute tolerance tol; requires a sign change on [lo, hi].
template <class F>
inline double bisect_root(const F& f, double lo, double hi, double tol) {
    double flo = f(lo), fhi = f(hi);
    if (flo == 0.0) return lo;
    if (fhi == 0.0) return hi;
    if ((flo > 0.0) == (fhi > 0.0))
        throw domain_error("bisect_root: no sign change on the bracket");
    while (hi - lo > tol) {
        double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;
        double fm = f(mid);
        if (fm == 0.0) return mid;
        if ((fm > 0.0) == (flo > 0.0)) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

} // namespace gt
