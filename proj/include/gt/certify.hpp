#pragma once

#include <cmath>
#include <numbers>
#include <ostream>
#include <random>
#include <string>
#include <vector>

#include "json.hpp"

#include "gt/body.hpp"
#include "gt/errors.hpp"
#include "gt/fourier.hpp"
#include "gt/quadrature.hpp"
#include "gt/sections.hpp"
#include "gt/vec.hpp"

namespace gt {

// The sign functional behind the intersection-body criterion: the Fourier
// transform of ||x||^{-1} at xi, which is non-negative for every xi exactly
// when the body is an intersection body.  q = n - 2, routed by parity.
inline double intersection_test_value(const SectionFunction& sf,
                                      const QuadratureConfig& cfg = {}) {
    const int n = sf.body().dim();
    if (n < 3) throw domain_error("intersection_test_value: n must be >= 3");
    const int k = n - 2;
    if (k % 2 == 0) return radial_power_ft(sf, static_cast<double>(k), cfg).value;
    return radial_power_ft_odd(sf, k, cfg).value;
}

inline double intersection_test_value(const StarBody& body, const Direction& xi,
                                      const QuadratureConfig& cfg = {}) {
    return intersection_test_value(section_function(body, xi, cfg), cfg);
}

// The certification integral for the revolution-quartic family at the
// symmetry axis, up to the positive factor c_3 = 12:
//   I(eps) = int_0^inf z^{-4} (A(z) - A(0) - A''(0) z^2 / 2) dz.
// On [0, a_eps] the subtracted integrand is the constant -(pi^2/2) eps
// (core); past the support only the Taylor part remains and integrates in
// closed form (tail).  I changes sign at eps = 3/4.
struct BpIntegral {
    double value;
    double core;
    double tail;
};

inline BpIntegral bp_integral(double eps, const QuadratureConfig& cfg = {}) {
    auto sf = section_function(make_counterexample_body(eps),
                               Direction::of(unit_axis(5, 4)), cfg);
    double a = quartic_profile_root(eps);
    double h = 0.5 * std::numbers::pi * std::numbers::pi;
    BpIntegral out;
    out.core = -h * eps * a;
    out.tail = h * (1.0 / a - 1.0 / (3.0 * a * a * a));
    out.value = detail::subtracted_moment_integral(sf, 3.0, 4, cfg).value;
    return out;
}

// Sign change of I(eps) on (0, 1), located by bisection.
inline double bp_threshold(const QuadratureConfig& cfg = {}) {
    return bisect_root([&](double e) { return bp_integral(e, cfg).value; }, 0.01,
                       0.99, 1e-12);
}

struct Certificate {
    enum class Verdict { refuted, positive_on_sample, inconclusive };
    Verdict verdict = Verdict::inconclusive;
    Vec witness_xi;          // refuting direction, or the sample minimizer
    double witness_value = 0.0;
    int directions_tested = 0;
    double tolerance = 0.0;
};

inline std::string to_string(Certificate::Verdict v) {
    switch (v) {
        case Certificate::Verdict::refuted: return "refuted";
        case Certificate::Verdict::positive_on_sample: return "positive-on-sample";
        case Certificate::Verdict::inconclusive: return "inconclusive";
    }
    return "?";
}

// Samples the intersection-body functional over the coordinate axes and a
// seeded batch of random directions.  A single value below -tolerance
// refutes; a clean sweep is only evidence, hence "positive-on-sample".
inline Certificate certify_intersection(const StarBody& body, int directions,
                                        unsigned seed = 0,
                                        const QuadratureConfig& cfg = {}) {
    const int n = body.dim();
    if (directions < 0) throw domain_error("certify_intersection: directions < 0");
    Certificate cert;
    cert.tolerance = 1e-6 * classical_ball_ft(n, static_cast<double>(n - 2));

    // axes first, last axis leading: for revolution bodies the distinguished
    // axis is the likeliest refuting direction
    std::vector<Vec> dirs;
    for (int i = n - 1; i >= 0; --i) dirs.push_back(unit_axis(n, i));
    std::mt19937 rng(seed);
    std::normal_distribution<double> g;
    while (static_cast<int>(dirs.size()) < n + directions) {
        Vec v(static_cast<std::size_t>(n));
        double s;
        do {
            for (double& x : v) x = g(rng);
            s = norm2(v);
        } while (s < 1e-6);
        dirs.push_back(scaled(v, 1.0 / s));
    }

    bool degraded = false;
    double best = std::numeric_limits<double>::infinity();
    for (const Vec& u : dirs) {
        double value;
        try {
            auto sf = section_function(body, Direction::of(u), cfg);
            value = intersection_test_value(sf, cfg);
        } catch (const accuracy_error&) {
            degraded = true;
            ++cert.directions_tested;
            continue;
        }
        ++cert.directions_tested;
        if (value < best) {
            best = value;
            cert.witness_xi = canonical_sign(u);
            cert.witness_value = value;
        }
        if (value < -cert.tolerance) {
            cert.verdict = Certificate::Verdict::refuted;
            return cert;
        }
    }
    cert.verdict = degraded ? Certificate::Verdict::inconclusive
                            : Certificate::Verdict::positive_on_sample;
    return cert;
}

inline nlohmann::json body_json(const StarBody& body) {
    nlohmann::json j;
    j["dimension"] = body.dim();
    j["kind"] = to_string(body.kind());
    nlohmann::json params = nlohmann::json::object();
    switch (body.kind()) {
        case BodyKind::ellipsoid: params["semi_axes"] = body.semi_axes(); break;
        case BodyKind::revolution_quartic: params["epsilon"] = body.epsilon(); break;
        default: break;
    }
    if (body.scale() != 1.0) params["scale"] = body.scale();
    j["params"] = params;
    return j;
}

inline nlohmann::json certificate_json(const Certificate& cert, const StarBody& body) {
    nlohmann::json j;
    j["verdict"] = to_string(cert.verdict);
    if (cert.witness_xi.empty()) {
        j["witness_xi"] = nullptr;
        j["witness_value"] = nullptr;
    } else {
        j["witness_xi"] = cert.witness_xi;
        j["witness_value"] = cert.witness_value;
    }
    j["directions_tested"] = cert.directions_tested;
    j["tolerance"] = cert.tolerance;
    j["body"] = body_json(body);
    return j;
}

inline void write_certificate_json(std::ostream& os, const Certificate& cert,
                                   const StarBody& body) {
    os << certificate_json(cert, body).dump(2) << "\n";
}

} // namespace gt
