#pragma once

#include <cmath>
#include <functional>
#include <limits>
#include <ostream>
#include <string>
#include <vector>

#include "gt/csv.hpp"
#include "gt/errors.hpp"
#include "gt/quadrature.hpp"
#include "gt/sections.hpp"
#include "gt/special.hpp"

namespace gt {

// A smooth test function on [0, inf) with derivatives at 0 on demand.
// support_end = +inf means rapid decay; decay_cut is where the tail
// integral is truncated in that case.
struct SmoothProbe {
    std::function<double(double)> eval;
    std::function<double(int)> deriv0;
    int max_deriv = 0;
    double support_end = std::numeric_limits<double>::infinity();
    double decay_cut = 40.0;

    static SmoothProbe gaussian() {
        SmoothProbe p;
        p.eval = [](double t) { return std::exp(-0.5 * t * t); };
        // d^k/dt^k e^{-t^2/2} at 0: 0 for odd k, (-1)^{k/2} (k-1)!! for even k
        p.deriv0 = [](int k) {
            if (k % 2 == 1) return 0.0;
            double v = 1.0;
            for (int i = k - 1; i > 0; i -= 2) v *= i;
            return (k / 2 % 2 == 0) ? v : -v;
        };
        p.max_deriv = 40;
        p.decay_cut = 14.0;
        return p;
    }

    static SmoothProbe exp_decay() {
        SmoothProbe p;
        p.eval = [](double t) { return std::exp(-t); };
        p.deriv0 = [](int k) { return (k % 2 == 0) ? 1.0 : -1.0; };
        p.max_deriv = 40;
        p.decay_cut = 60.0;
        return p;
    }

    // (1 - t^2)_+^2, compactly supported on [0, 1]
    static SmoothProbe bump_quartic() {
        SmoothProbe p;
        p.eval = [](double t) {
            double u = 1.0 - t * t;
            return u > 0.0 ? u * u : 0.0;
        };
        p.deriv0 = [](int k) {
            switch (k) {
                case 0: return 1.0;
                case 2: return -4.0;
                case 4: return 24.0;
                default: return 0.0;
            }
        };
        p.max_deriv = 40;
        p.support_end = 1.0;
        return p;
    }
};

namespace detail {

// Integral over (0, delta) of t^lambda * (phi - Taylor_{m-1}) through the
// Taylor series of the remainder; needs derivatives up to m + 2J - 1.
inline double series_head(const SmoothProbe& phi, double lambda, int m, double delta,
                          int terms) {
    double s = 0.0;
    double fact = 1.0;
    for (int k = 1; k < m; ++k) fact *= k;
    for (int k = m; k < m + terms && k <= phi.max_deriv; ++k) {
        if (k > 0) fact *= k; // fact = k!
        else fact = 1.0;
        double e = lambda + k + 1.0;
        s += phi.deriv0(k) / fact * std::pow(delta, e) / e;
    }
    return s;
}

} // namespace detail

// The regularized pairing <t_+^lambda, phi> for -m-1 < lambda, lambda not a
// negative integer down to -m: subtracted-Taylor integral over (0,1), plain
// integral over (1,inf), plus the rational correction sum.
inline double regularized_tplus(double lambda, const SmoothProbe& phi, int m,
                                const QuadratureConfig& cfg = {}) {
    if (m < 0) throw domain_error("regularized_tplus: m must be >= 0");
    if (!(lambda > -m - 1.0))
        throw domain_error("regularized_tplus: requires lambda > -m-1");
    double r = std::round(lambda);
    if (r <= -1.0 && r >= -m && std::abs(lambda - r) < 1e-12)
        throw domain_error("regularized_tplus: lambda at a pole of t_+^lambda");
    if (phi.max_deriv < m - 1)
        throw domain_error("regularized_tplus: phi lacks required derivatives");

    // Taylor polynomial of order m-1 at 0
    auto taylor = [&](double t) {
        double s = 0.0, fact = 1.0, tp = 1.0;
        for (int k = 0; k < m; ++k) {
            if (k > 0) {
                fact *= k;
                tp *= t;
            }
            s += phi.deriv0(k) / fact * tp;
        }
        return s;
    };

    const double delta = 0.05;
    double head = detail::series_head(phi, lambda, m, delta, 10);
    auto sub = [&](double t) { return std::pow(t, lambda) * (phi.eval(t) - taylor(t)); };
    double i01 = head + integrate_adaptive(sub, delta, 1.0, cfg).value;

    double upper = std::min(phi.support_end, phi.decay_cut);
    double i1inf = 0.0;
    if (upper > 1.0) {
        auto plain = [&](double t) { return std::pow(t, lambda) * phi.eval(t); };
        i1inf = integrate_adaptive(plain, 1.0, upper, cfg).value;
    }

    double corr = 0.0, fact = 1.0;
    for (int k = 1; k <= m; ++k) {
        if (k > 1) fact *= (k - 1); // (k-1)!
        corr += phi.deriv0(k - 1) / (fact * (lambda + k));
    }
    return i01 + i1inf + corr;
}

// Residue of lambda -> <t_+^lambda, phi> at lambda = -k, estimated from
// symmetric near-pole evaluations with Richardson extrapolation in h.
// The analytic value is phi^{(k-1)}(0)/(k-1)!.
inline double tplus_residue_check(int k, const SmoothProbe& phi,
                                  const QuadratureConfig& cfg = {}) {
    if (k < 1) throw domain_error("tplus_residue_check: k must be >= 1");
    auto estimate = [&](double h) {
        double fp = regularized_tplus(-k + h, phi, k, cfg);
        double fm = regularized_tplus(-k - h, phi, k, cfg);
        return 0.5 * h * (fp - fm);
    };
    double h1 = 1e-4, h2 = 1e-5;
    double r1 = estimate(h1), r2 = estimate(h2);
    // residue estimates carry an O(h^2) bias from the analytic part
    return (h1 * h1 * r2 - h2 * h2 * r1) / (h1 * h1 - h2 * h2);
}

// <t_+^lambda / Gamma(lambda+1), phi> at lambda = -k: the pole of the
// pairing cancels the Gamma pole, leaving (-1)^{k-1} phi^{(k-1)}(0).
// Cross-checked against the ratio just off the pole.
inline double tplus_over_gamma_at_negative_integer(int k, const SmoothProbe& phi,
                                                   const QuadratureConfig& cfg = {}) {
    if (k < 1) throw domain_error("k must be >= 1");
    double fact = 1.0;
    for (int i = 2; i < k; ++i) fact *= i;
    double exact = ((k - 1) % 2 == 0 ? 1.0 : -1.0) * phi.deriv0(k - 1);
    double h = 1e-5;
    double probe = 0.5 * (regularized_tplus(-k + h, phi, k, cfg) / gamma_real(1.0 - k + h) +
                          regularized_tplus(-k - h, phi, k, cfg) / gamma_real(1.0 - k - h));
    double scale = std::max({std::abs(exact), std::abs(phi.deriv0(0)), 1.0});
    if (std::abs(probe - exact) > 1e-3 * scale)
        throw accuracy_error("tplus_over_gamma: near-pole ratio disagrees with the limit",
                             exact, std::abs(probe - exact));
    return exact;
}

enum class FracBranch { strip, general, integer_limit };

inline std::string to_string(FracBranch b) {
    switch (b) {
        case FracBranch::strip: return "strip";
        case FracBranch::general: return "general";
        case FracBranch::integer_limit: return "integer-limit";
    }
    return "?";
}

// The value A_xi^{(q)}(0) with the regularization order used and an error
// estimate.
struct FractionalValue {
    double q = 0.0;
    int m = 0;
    double value = 0.0;
    double err_est = 0.0;
    FracBranch branch = FracBranch::strip;
};

namespace detail {

// Core subtracted-moment integral for even m with m-2 < q < m (and, in the
// odd-order Fourier route, q = m-1):
//
//   I = int_0^inf t^{-q-1} (A(t) - sum_{j <= (m-2)/2} c_j t^{2j}) dt,
//
// c_j the even Taylor coefficients of A.  Split: a Taylor-series head on
// (0, delta) avoids catastrophic cancellation, adaptive quadrature covers
// (delta, L) split at L/2, and the polynomial tail beyond the support end L
// is summed in closed form.
inline IntegralResult subtracted_moment_integral(const SectionFunction& sf, double q,
                                                 int m, const QuadratureConfig& cfg) {
    if (m % 2 != 0 || m < 0)
        throw domain_error("subtracted_moment_integral: m must be even and >= 0");
    const double L = sf.support_end();
    const int jmax = (m - 2) / 2; // subtract c_0..c_jmax (none when m = 0)
    std::vector<double> c;
    for (int j = 0; j <= jmax; ++j) c.push_back(sf.taylor_coeff(j));

    // finite-difference sections carry evaluation noise that t^{-q-1}
    // amplifies near 0; a wider series-head cutoff and floored tolerances
    // keep the adaptive pass from chasing that noise
    const bool analytic = sf.derivative_source() == DerivativeSource::analytic;
    const double delta = analytic ? L / 16.0 : L * 0.05;
    const int terms = analytic ? 14 : (sf.max_taylor() - m / 2 + 1);
    QuadratureConfig mcfg = cfg;
    if (!analytic) {
        mcfg.rel_tol = std::max(cfg.rel_tol, 1e-6);
        mcfg.abs_tol = std::max(cfg.abs_tol, 1e-9);
    }

    double head = 0.0, head_err = 0.0;
    double last = 0.0;
    for (int i = 0; i < terms; ++i) {
        int j = m / 2 + i;
        if (j > sf.max_taylor()) break;
        double e = 2.0 * j - q;
        last = sf.taylor_coeff(j) * std::pow(delta, e) / e;
        head += last;
    }
    head_err = std::abs(last);

    auto sub = [&](double t) {
        double s = sf(t), tp = 1.0;
        for (int j = 0; j <= jmax; ++j) {
            s -= c[static_cast<std::size_t>(j)] * tp;
            tp *= t * t;
        }
        return std::pow(t, -q - 1.0) * s;
    };
    auto mid1 = integrate_adaptive(sub, delta, 0.5 * L, mcfg);
    auto mid2 = integrate_adaptive(sub, 0.5 * L, L, mcfg);

    double tail = 0.0;
    for (int j = 0; j <= jmax; ++j)
        tail += c[static_cast<std::size_t>(j)] * std::pow(L, 2.0 * j - q) / (2.0 * j - q);

    return {head + mid1.value + mid2.value + tail,
            head_err + mid1.err_est + mid2.err_est};
}

} // namespace detail

// Fractional derivative A_xi^{(q)}(0) through the strip representation
// (even-order Taylor subtraction over the whole half line).  Valid for
// q > -1 away from non-negative integers; integer orders short-circuit to
// the classical derivatives.
inline FractionalValue fractional_section_derivative(const SectionFunction& sf, double q,
                                                     const QuadratureConfig& cfg = {}) {
    if (!(q > -1.0)) throw domain_error("fractional_section_derivative: requires q > -1");
    FractionalValue out;
    out.q = q;
    double r = std::round(q);
    if (r >= 0.0 && std::abs(q - r) < 1e-6) {
        int k = static_cast<int>(r);
        out.m = k;
        out.branch = FracBranch::integer_limit;
        out.value = (k % 2 == 0) ? sf.derivative_at_zero(k) : 0.0;
        out.err_est = 0.0;
        return out;
    }
    int m = (q < 0.0) ? 0 : 2 * static_cast<int>(std::floor(0.5 * q)) + 2;
    out.m = m;
    out.branch = FracBranch::strip;
    double g = gamma_real(-q);
    QuadratureConfig icfg = cfg;
    icfg.abs_tol = cfg.abs_tol * std::max(1.0, std::abs(g));
    auto I = detail::subtracted_moment_integral(sf, q, m, icfg);
    out.value = I.value / g;
    out.err_est = I.err_est / std::abs(g);
    return out;
}

// The same value through the split representation: subtracted integral on
// (0,1), plain integral on (1,inf), rational correction sum.  Used to check
// continuity across representations.
inline FractionalValue fractional_section_derivative_general(
    const SectionFunction& sf, double q, const QuadratureConfig& cfg = {}) {
    if (!(q > -1.0)) throw domain_error("requires q > -1");
    double r = std::round(q);
    if (r >= 0.0 && std::abs(q - r) < 1e-6)
        return fractional_section_derivative(sf, q, cfg);

    FractionalValue out;
    out.q = q;
    out.branch = FracBranch::general;
    const int mg = (q < 0.0) ? 0 : static_cast<int>(std::floor(q)) + 1;
    out.m = mg;
    const double L = sf.support_end();
    std::vector<double> cp; // c'_k = A^{(k)}(0)/k!
    double fact = 1.0;
    for (int k = 0; k < mg; ++k) {
        if (k > 0) fact *= k;
        cp.push_back(sf.derivative_at_zero(k) / fact);
    }

    const double delta = std::min(1.0, L) / 16.0;
    double head = 0.0;
    for (int i = 0; i < 14; ++i) {
        int j = (mg + 1) / 2 + i; // first even order not subtracted
        if (j > sf.max_taylor()) break;
        double e = 2.0 * j - q;
        head += sf.taylor_coeff(j) * std::pow(delta, e) / e;
    }
    auto sub = [&](double t) {
        double s = sf(t), tp = 1.0;
        for (int k = 0; k < mg; ++k) {
            s -= cp[static_cast<std::size_t>(k)] * tp;
            tp *= t;
        }
        return std::pow(t, -q - 1.0) * s;
    };
    double part1 = head;
    IntegralResult mid{0.0, 0.0};
    if (L >= 1.0) {
        mid = integrate_adaptive(sub, delta, 1.0, cfg);
        part1 += mid.value;
    } else {
        mid = integrate_adaptive(sub, delta, L, cfg);
        part1 += mid.value;
        // on (L, 1) the section vanishes and the Taylor part integrates in
        // closed form
        for (int k = 0; k < mg; ++k)
            part1 += cp[static_cast<std::size_t>(k)] *
                     (std::pow(L, k - q) - 1.0) / (k - q);
    }
    double part2 = 0.0;
    if (L > 1.0) {
        auto plain = [&](double t) { return std::pow(t, -q - 1.0) * sf(t); };
        part2 = integrate_adaptive(plain, 1.0, L, cfg).value;
    }
    double part3 = 0.0;
    for (int k = 0; k < mg; ++k)
        part3 += cp[static_cast<std::size_t>(k)] / (k - q);

    double g = gamma_real(-q);
    out.value = (part1 + part2 + part3) / g;
    out.err_est = mid.err_est / std::abs(g);
    return out;
}

// CSV emitter, columns `q, value, err_est, branch`.
inline void write_fractional_csv(std::ostream& os,
                                 const std::vector<FractionalValue>& rows) {
    os << "q,value,err_est,branch\n";
    for (const auto& fv : rows)
        os << num17(fv.q) << "," << num17(fv.value) << "," << num17(fv.err_est)
           << "," << to_string(fv.branch) << "\n";
}

} // namespace gt
