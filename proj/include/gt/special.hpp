#pragma once

#include <cmath>
#include <numbers>
#include <string>

#include "gt/errors.hpp"

namespace gt {

namespace detail {

// Lanczos approximation, g = 7, 9 terms.  Good to ~15 significant digits
// for x >= 0.5; negative axis goes through the reflection formula.
inline double gamma_positive(double x) {
    static const double coef[9] = {
        0.99999999999980993,
        676.5203681218851,
        -1259.1392167224028,
        771.32342877765313,
        -176.61502916214059,
        12.507343278686905,
        -0.13857109526572012,
        9.9843695780195716e-6,
        1.5056327351493116e-7,
    };
    const double g = 7.0;
    double z = x - 1.0;
    double a = coef[0];
    for (int i = 1; i < 9; ++i) a += coef[i] / (z + i);
    double t = z + g + 0.5;
    return std::sqrt(2.0 * std::numbers::pi) * std::pow(t, z + 0.5) * std::exp(-t) * a;
}

} // namespace detail

// Real Gamma function on [-170, 170] minus the poles at 0, -1, -2, ...
inline double gamma_real(double x) {
    double nearest = std::round(x);
    if (nearest <= 0.0 && std::abs(x - nearest) <= 1e-12)
        throw pole_error("gamma_real: argument at pole " + std::to_string(x),
                         static_cast<int>(-nearest));
    if (x >= 0.5) return detail::gamma_positive(x);
    // reflection: Gamma(x) Gamma(1-x) = pi / sin(pi x)
    double s = std::sin(std::numbers::pi * x);
    return std::numbers::pi / (s * detail::gamma_positive(1.0 - x));
}

inline bool is_gamma_pole(double x, double window = 1e-12) {
    double nearest = std::round(x);
    return nearest <= 0.0 && std::abs(x - nearest) <= window;
}

inline double beta_real(double a, double b) {
    if (is_gamma_pole(a) || is_gamma_pole(b) || is_gamma_pole(a + b))
        throw domain_error("beta_real: argument at Gamma pole");
    return gamma_real(a) * gamma_real(b) / gamma_real(a + b);
}

// Volume of the n-dimensional Euclidean unit ball, kappa_n.
// vol(n) = vol(n-2) * 2 pi / n keeps half-integer Gamma values exact.
inline double unit_ball_volume(int n) {
    if (n < 1) throw domain_error("unit_ball_volume: n must be >= 1");
    double v = (n % 2 == 1) ? 2.0 : std::numbers::pi;
    for (int k = (n % 2 == 1) ? 3 : 4; k <= n; k += 2)
        v *= 2.0 * std::numbers::pi / k;
    return v;
}

// Surface area of S^d, the unit sphere in R^{d+1}.
inline double sphere_area(int d) {
    return 2.0 * std::pow(std::numbers::pi, 0.5 * (d + 1)) / gamma_real(0.5 * (d + 1));
}

// Generalized binomial coefficient binom(p, j) for real p.
inline double binom_real(double p, int j) {
    double r = 1.0;
    for (int i = 0; i < j; ++i) r *= (p - i) / (i + 1);
    return r;
}

} // namespace gt
