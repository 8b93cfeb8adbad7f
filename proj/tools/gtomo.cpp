#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "gt/certify.hpp"
#include "gt/fourier.hpp"
#include "gt/fracderiv.hpp"
#include "gt/radon.hpp"
#include "gt/sections.hpp"
#include "gt/sphere.hpp"

using namespace gt;
using std::numbers::pi;
using nlohmann::json;

namespace {

void write_atomic(const std::string& path, const std::string& content) {
    if (path.empty()) {
        std::cout << content;
        return;
    }
    std::string tmp = path + ".tmp";
    {
        std::ofstream os(tmp, std::ios::binary | std::ios::trunc);
        if (!os) throw domain_error("cannot open output file: " + tmp);
        os << content;
        if (!os.flush()) throw domain_error("write failed: " + tmp);
    }
    if (std::rename(tmp.c_str(), path.c_str()) != 0) {
        std::remove(tmp.c_str());
        throw domain_error("cannot rename output into place: " + path);
    }
}

Vec parse_xi(const std::string& text) {
    Vec v;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        try {
            std::size_t used = 0;
            v.push_back(std::stod(tok, &used));
            if (used != tok.size()) throw std::invalid_argument(tok);
        } catch (const std::exception&) {
            throw domain_error("--xi: cannot parse component '" + tok + "'");
        }
    }
    if (v.size() < 2) throw domain_error("--xi: need at least 2 components");
    return v;
}

std::vector<double> parse_grid(const std::string& text) {
    double lo, hi, step;
    char c1, c2;
    std::stringstream ss(text);
    if (!(ss >> lo >> c1 >> hi >> c2 >> step) || c1 != ':' || c2 != ':' ||
        !(step > 0.0) || hi < lo)
        throw domain_error("--grid: expected lo:hi:step with step > 0, got '" + text +
                           "'");
    std::vector<double> zs;
    for (double z = lo; z <= hi + 0.5 * step; z += step) zs.push_back(z);
    return zs;
}

std::vector<double> parse_list(const std::string& flag, const std::string& text) {
    std::vector<double> v;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        try {
            v.push_back(std::stod(tok));
        } catch (const std::exception&) {
            throw domain_error(flag + ": cannot parse '" + tok + "'");
        }
    }
    if (v.empty()) throw domain_error(flag + ": empty list");
    return v;
}

RadialTable load_samples(const std::string& path, int n) {
    std::ifstream is(path);
    if (!is) throw domain_error("body config: cannot open samples file '" + path + "'");
    RadialTable t;
    double x;
    std::vector<double> row;
    while (is >> x) {
        row.push_back(x);
        if (static_cast<int>(row.size()) == n + 1) {
            Vec u(row.begin(), row.end() - 1);
            t.nodes.push_back(normalized(u));
            t.values.push_back(row.back());
            row.clear();
        }
    }
    if (!row.empty() || t.nodes.empty())
        throw domain_error("body config: samples file '" + path +
                           "' must hold rows of dimension+1 reals");
    return t;
}

StarBody load_body(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw domain_error("cannot open body config: " + path);
    json j;
    try {
        is >> j;
    } catch (const json::parse_error& e) {
        throw domain_error("body config parse error in " + path + ": " + e.what());
    }
    for (const char* key : {"dimension", "kind", "params"})
        if (!j.contains(key))
            throw domain_error("body config: missing key '" + std::string(key) + "'");
    if (!j["dimension"].is_number_integer())
        throw domain_error("body config: key 'dimension' must be an integer");
    int n = j["dimension"].get<int>();
    std::string kind = j["kind"].get<std::string>();
    const json& p = j["params"];
    double scale = p.contains("scale") ? p["scale"].get<double>() : 1.0;

    StarBody body = [&]() {
        if (kind == "ball") return StarBody::ball(n);
        if (kind == "ellipsoid") {
            if (!p.contains("semi_axes"))
                throw domain_error("body config: ellipsoid requires key 'semi_axes'");
            return StarBody::ellipsoid(n, p["semi_axes"].get<Vec>());
        }
        if (kind == "revolution-quartic") {
            if (!p.contains("epsilon"))
                throw domain_error(
                    "body config: revolution-quartic requires key 'epsilon'");
            if (n != 5)
                throw domain_error("body config: revolution-quartic requires dimension 5");
            return make_counterexample_body(p["epsilon"].get<double>());
        }
        if (kind == "radial-table") {
            if (!p.contains("samples"))
                throw domain_error("body config: radial-table requires key 'samples'");
            std::string sp = p["samples"].get<std::string>();
            if (sp.find('/') == std::string::npos) {
                auto slash = path.find_last_of('/');
                if (slash != std::string::npos) sp = path.substr(0, slash + 1) + sp;
            }
            return StarBody::radial_table(n, load_samples(sp, n));
        }
        throw domain_error("body config: unknown kind '" + kind + "'");
    }();
    return scale == 1.0 ? body : body.dilated(scale);
}

// classical reference for round bodies, NaN otherwise
double ball_oracle(const StarBody& body, double q) {
    if (body.kind() != BodyKind::ball)
        return std::numeric_limits<double>::quiet_NaN();
    int n = body.dim();
    if (is_gamma_pole(0.5 * (q + 1.0)) || is_gamma_pole(0.5 * (n - q - 1.0)))
        return std::numeric_limits<double>::quiet_NaN();
    return std::pow(body.scale(), n - q - 1.0) * classical_ball_ft(n, q);
}

struct SelfCheck {
    int failures = 0;

    void value(const std::string& name, double got, double want, double tol) {
        bool ok = std::isfinite(got) && std::abs(got - want) <= tol;
        report(name, ok, num17(got) + " vs " + num17(want));
    }

    void truth(const std::string& name, bool ok) { report(name, ok, ""); }

    void report(const std::string& name, bool ok, const std::string& detail) {
        if (!ok) ++failures;
        std::cout << (ok ? "ok   " : "FAIL ") << name;
        if (!ok && !detail.empty()) std::cout << "  (" << detail << ")";
        std::cout << "\n";
    }
};

int run_selfcheck() {
    SelfCheck sc;
    QuadratureConfig cfg;

    // geometry: quartic gauge, radial, profile concavity
    {
        double a9 = quartic_profile_root(0.9);
        double closed = std::sqrt((std::sqrt(1.0 + 4.0 * 0.9) - 1.0) / (2.0 * 0.9));
        sc.value("quartic profile root eps=0.9", a9, closed, 1e-10);
        sc.value("quartic profile root eps=0.5", quartic_profile_root(0.5),
                 std::sqrt((std::sqrt(3.0) - 1.0)), 1e-10);
        auto body = make_counterexample_body(0.9);
        Vec bdry(5, 0.0);
        bdry[4] = a9;
        sc.value("quartic gauge on boundary", minkowski_functional(body, bdry), 1.0,
                 1e-9);
        sc.value("quartic radial at axis", body.radial(unit_axis(5, 4)), a9, 1e-9);
        auto b5 = make_counterexample_body(0.5);
        Vec u = normalized(Vec{1, 0, 0, 0, 1});
        double r_lib = b5.radial(u);
        double r_ray = bisect_root(
            [&](double r) {
                Vec x = scaled(u, r);
                double s2 = x[0] * x[0];
                return s2 * s2 + x[4] * x[4] + 0.5 * std::pow(x[4], 4) - 1.0;
            },
            0.0, 2.0, 1e-12);
        sc.value("quartic radial oblique vs ray bisection", r_lib, r_ray, 1e-9);
        sc.truth("quartic profile concavity eps=0.5",
                 profile_concavity_check(0.5, 101));
    }

    // numerics: sphere moment, bisection
    {
        auto rule = sphere_rule(2, cfg.sphere_nodes);
        double m = rule.integrate([](const Vec& v) { return v[0] * v[0]; });
        sc.value("sphere moment d=2 of u1^2", m, 4.0 * pi / 3.0, 1e-10);
        double r9 = bisect_root(
            [](double a) { return 1.0 - a * a - 0.9 * std::pow(a, 4); }, 0.0, 1.0,
            1e-10);
        sc.value("bisection root eps=0.9", r9, 0.7974821, 1e-6);
        double r5 = bisect_root(
            [](double a) { return 1.0 - a * a - 0.5 * std::pow(a, 4); }, 0.0, 1.0,
            1e-10);
        sc.value("bisection root eps=0.5", r5, 0.8555996, 1e-6);
    }

    // sections: closed forms, engine cross-check, derivatives, scaling
    {
        auto cx = section_function(make_counterexample_body(0.9),
                                   Direction::of(unit_axis(5, 4)));
        sc.value("quartic section eps=0.9 z=0.5", cx(0.5),
                 0.5 * pi * pi * (1.0 - 0.25 - 0.9 * 0.0625), 1e-9);
        auto ball3 = section_function(StarBody::ball(3), Direction::of(unit_axis(3, 2)));
        sc.value("ball3 section z=0.6", ball3(0.6), 2.0106193, 1e-6);
        // independent engine evaluation of the same slice
        auto rule = sphere_rule(1, cfg.sphere_nodes);
        Vec xi = unit_axis(3, 2);
        auto basis = orthonormal_complement(xi);
        double acc = 0.0;
        for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
            Vec v(3, 0.0);
            for (int jj = 0; jj < 2; ++jj)
                for (int c = 0; c < 3; ++c)
                    v[static_cast<std::size_t>(c)] +=
                        rule.nodes[i][static_cast<std::size_t>(jj)] *
                        basis[static_cast<std::size_t>(jj)][static_cast<std::size_t>(c)];
            Vec center = scaled(xi, 0.6);
            auto g = [&](double r) {
                Vec x = add_scaled(center, v, r);
                return dot(x, x) - 1.0;
            };
            acc += rule.weights[i] * std::pow(bisect_root(g, 0.0, 2.0, 1e-12), 2);
        }
        sc.value("ball3 section z=0.6 via engine rule", acc / 2.0, pi * 0.64, 1e-9);

        auto ball4 = section_function(StarBody::ball(4), Direction::of(unit_axis(4, 0)));
        sc.value("ball4 A''(0)", ball4.derivative_at_zero(2), -4.0 * pi, 1e-10);
        sc.value("quartic A''(0)", cx.derivative_at_zero(2), -pi * pi, 1e-10);
        sc.value("scaling xi=2e3 z=0",
                 section_scaling_check(StarBody::ball(3), Vec{0, 0, 2}, 0.0), 0.5 * pi,
                 1e-10);
        sc.value("scaling xi=2e3 z=1",
                 section_scaling_check(StarBody::ball(3), Vec{0, 0, 2}, 1.0),
                 0.5 * pi * 0.75, 1e-10);
    }

    // regularized pairing: direct-quadrature oracle values, residues
    {
        auto g = SmoothProbe::gaussian();
        double cont = std::pow(2.0, 0.5 * (-1.5 - 1.0)) * gamma_real(0.5 * (-1.5 + 1.0));
        sc.value("t_+^{-1.5} on gaussian", regularized_tplus(-1.5, g, 1), cont, 1e-9);
        auto b = SmoothProbe::bump_quartic();
        sc.value("t_+^{-2.5} on (1-t^2)_+^2", regularized_tplus(-2.5, b, 2),
                 -64.0 / 15.0, 1e-9);
        sc.value("residue k=3 gaussian", tplus_residue_check(3, g), -0.5, 1e-5);
        sc.value("normalized pairing k=3",
                 tplus_over_gamma_at_negative_integer(3, g), -1.0, 1e-12);
    }

    // fractional derivatives: Beta-continuation ball oracle
    {
        auto oracle = [](int n, double q) {
            return unit_ball_volume(n - 1) * std::sqrt(pi) * std::pow(2.0, q) *
                   gamma_real(0.5 * (n + 1)) /
                   (gamma_real(0.5 * (1.0 - q)) * gamma_real(0.5 * (n + 1.0 - q)));
        };
        auto b3 = section_function(StarBody::ball(3), Direction::of(unit_axis(3, 2)));
        sc.value("ball3 A^{(q)}(0) q=-0.5", fractional_section_derivative(b3, -0.5).value,
                 oracle(3, -0.5), 1e-8);
        sc.value("ball3 A^{(q)}(0) q->2", fractional_section_derivative(b3, 2.0).value,
                 -2.0 * pi, 1e-12);
        auto b5 = section_function(StarBody::ball(5), Direction::of(unit_axis(5, 0)));
        double v515 = fractional_section_derivative(b5, 1.5).value;
        sc.value("ball5 A^{(q)}(0) q=1.5", v515, oracle(5, 1.5),
                 1e-7 * std::abs(oracle(5, 1.5)));
    }

    // 1-D transform of |x|^q
    {
        sc.value("ft |x|^{-1/2} at t=1", ft_abs_power(-0.5, 1.0), std::sqrt(2.0 * pi),
                 1e-10);
        sc.value("ft |x|^{-1/2} at t=4", ft_abs_power(-0.5, 4.0),
                 0.5 * std::sqrt(2.0 * pi), 1e-10);
        sc.value("ft |x|^{1/2} at t=1", ft_abs_power(0.5, 1.0), -1.2533141, 1e-6);
    }

    // gaussian consistency identity
    {
        auto l3 = lemma5_check(3, -0.5, cfg);
        sc.value("gaussian identity n=3 q=-0.5 (lhs vs rhs)", l3.rhs, l3.lhs,
                 1e-8 * std::abs(l3.lhs));
        auto l2 = lemma5_check(2, -0.5, cfg);
        sc.value("gaussian identity n=2 lhs", l2.lhs, 10.8085, 1e-3);
        sc.value("gaussian identity n=2 (lhs vs rhs)", l2.rhs, l2.lhs,
                 1e-8 * std::abs(l2.lhs));
    }

    // radial-power transforms vs the classical oracle
    {
        auto sf = [](int n) {
            return section_function(StarBody::ball(n), Direction::of(unit_axis(n, 0)));
        };
        sc.value("transform n=4 q=2", radial_power_ft(sf(4), 2.0).value,
                 classical_ball_ft(4, 2.0), 1e-8);
        sc.value("transform n=3 q=-0.5", radial_power_ft(sf(3), -0.5).value,
                 classical_ball_ft(3, -0.5), 1e-7);
        sc.value("transform n=5 q=0", radial_power_ft(sf(5), 0.0).value,
                 2.0 * std::pow(pi, 3), 1e-8);
        sc.value("odd transform n=3 k=1", radial_power_ft_odd(sf(3), 1).value,
                 4.0 * pi, 1e-8);
        sc.value("odd transform n=5 k=3", radial_power_ft_odd(sf(5), 3).value,
                 16.0 * pi * pi, 1e-6);
        auto cx = section_function(make_counterexample_body(0.9),
                                   Direction::of(unit_axis(5, 4)));
        sc.value("odd transform quartic eps=0.9", radial_power_ft_odd(cx, 3).value,
                 12.0 * bp_integral(0.9).value, 1e-7);
    }

    // slice identity
    {
        auto s1 = slice_relation_check(3, pi, cfg);
        sc.value("slice identity t=pi", s1.lhs, 4.0 / pi, 1e-9);
        auto s2 = slice_relation_check(3, 2.0 * pi, cfg);
        sc.value("slice identity t=2pi", s2.lhs, -1.0 / pi, 1e-9);
    }

    // certification
    {
        auto at = [](int n) {
            return intersection_test_value(
                section_function(StarBody::ball(n), Direction::of(unit_axis(n, 0))));
        };
        sc.value("intersection functional ball n=4", at(4), 4.0 * pi * pi, 1e-8);
        sc.value("intersection functional ball n=5", at(5), 16.0 * pi * pi, 1e-6);
        auto cx = section_function(make_counterexample_body(0.9),
                                   Direction::of(unit_axis(5, 4)));
        sc.value("intersection functional quartic", intersection_test_value(cx),
                 -7.167, 1e-3);
        double a9 = quartic_profile_root(0.9);
        double closed9 = pi * pi / std::pow(a9, 3) * (a9 * a9 - 2.0 / 3.0);
        sc.value("certification integral eps=0.9", bp_integral(0.9).value, closed9,
                 1e-9);
        sc.value("certification integral eps=0.9 (coarse)", bp_integral(0.9).value,
                 -0.59724, 1e-4);
        sc.value("certification integral eps=0.5", bp_integral(0.5).value, 1.0303,
                 1e-4);
        sc.value("certification integral eps=0.75", bp_integral(0.75).value, 0.0, 1e-6);
        sc.value("sign-change threshold", bp_threshold(), 0.75, 1e-3);
        sc.truth("integral negative past threshold", bp_integral(0.85).value < 0.0);
        sc.truth("integral positive before threshold", bp_integral(0.65).value > 0.0);
        auto bad = certify_intersection(make_counterexample_body(0.9), 0);
        sc.truth("certify quartic eps=0.9 refuted",
                 bad.verdict == Certificate::Verdict::refuted &&
                     bad.witness_xi == unit_axis(5, 4));
        sc.value("certify witness value", bad.witness_value, -7.167, 1e-3);
        auto good = certify_intersection(StarBody::ellipsoid(4, Vec{1, 1, 1, 2}), 50);
        sc.truth("certify ellipsoid positive-on-sample",
                 good.verdict == Certificate::Verdict::positive_on_sample);
    }

    // radon
    {
        SphericalFunction sq{3, [](const Vec& u) { return u[0] * u[0]; }, true};
        auto d = radon_duality_check({{unit_axis(3, 2), 1.0}}, sq, cfg);
        sc.value("duality atom e3 with u1^2", d.rhs, pi, 1e-9);
        double inv = inverse_radon_3d(StarBody::ball(3), Direction::of(unit_axis(3, 2)));
        sc.value("inverse transform unit ball", inv, 1.0 / (2.0 * pi), 1e-10);
        sc.value("inverse transform ball radius 2",
                 inverse_radon_3d(StarBody::ball(3).dilated(2.0),
                                  Direction::of(unit_axis(3, 2))),
                 1.0 / pi, 1e-10);
        auto rel = radon_fourier_relation_check(StarBody::ball(3),
                                                Direction::of(unit_axis(3, 2)));
        sc.value("inversion identity lhs", rel.lhs, 4.0 * pi, 1e-8);
        sc.value("inversion identity rhs", rel.rhs, 4.0 * pi, 1e-6);
        auto rel2 = radon_fourier_relation_check(StarBody::ball(3).dilated(2.0),
                                                 Direction::of(unit_axis(3, 2)));
        sc.value("inversion identity at radius 2, lhs", rel2.lhs, 8.0 * pi, 1e-8);
        sc.value("inversion identity at radius 2, rhs", rel2.rhs, 8.0 * pi, 1e-6);
        double rho = spherical_radon(SphericalFunction::constant(3, inv),
                                     Direction::of(normalized(Vec{1, 1, 1})), cfg);
        sc.value("reconstruction closure", rho, 1.0, 1e-9);
    }

    std::cout << (sc.failures == 0 ? "selfcheck passed" : "selfcheck FAILED") << " ("
              << sc.failures << " failures)\n";
    return sc.failures == 0 ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"numerical toolkit for sections, fractional derivatives, and "
                 "transforms of star bodies"};
    app.require_subcommand(1);

    std::string body_path, xi_text, grid_text = "0:1:0.1", out_path;
    std::string q_text = "0.5";
    int k = 0, directions = 100;
    unsigned seed = 0;
    double epsilon = 0.0, tol = 0.0;

    auto add_common = [&](CLI::App* cmd, bool needs_body) {
        auto* b = cmd->add_option("--body", body_path, "body config path (JSON)");
        if (needs_body) b->required()->check(CLI::ExistingFile);
        cmd->add_option("--out", out_path, "output path (default: stdout)");
        cmd->add_option("--tol", tol, "relative quadrature tolerance")
            ->check(CLI::PositiveNumber);
    };

    auto* c_sections = app.add_subcommand("sections", "parallel section function");
    add_common(c_sections, true);
    c_sections->add_option("--xi", xi_text, "direction, comma-separated")->required();
    c_sections->add_option("--grid", grid_text, "z grid lo:hi:step");

    auto* c_frac = app.add_subcommand("fracderiv", "fractional derivatives at 0");
    add_common(c_frac, true);
    c_frac->add_option("--xi", xi_text, "direction, comma-separated")->required();
    c_frac->add_option("--q", q_text, "orders, comma-separated");

    auto* c_fourier = app.add_subcommand("fourier", "transforms of radial powers");
    add_common(c_fourier, true);
    c_fourier->add_option("--xi", xi_text, "direction, comma-separated")->required();
    c_fourier->add_option("--q", q_text, "orders, comma-separated");
    c_fourier->add_option("--k", k, "odd integer order")->check(CLI::PositiveNumber);

    auto* c_certify = app.add_subcommand("certify", "intersection-body certification");
    add_common(c_certify, true);
    c_certify->add_option("--directions", directions, "random directions to sample")
        ->check(CLI::NonNegativeNumber);
    c_certify->add_option("--seed", seed, "sampling seed");

    auto* c_counter = app.add_subcommand("counterexample",
                                         "revolution-quartic certification report");
    add_common(c_counter, false);
    c_counter->add_option("--epsilon", epsilon, "quartic parameter in (0,1)")
        ->required();
    c_counter->add_option("--directions", directions, "random directions to sample")
        ->default_val(0);
    c_counter->add_option("--seed", seed, "sampling seed");

    auto* c_radon = app.add_subcommand("radon", "inversion and transform identity, n=3");
    add_common(c_radon, true);
    c_radon->add_option("--xi", xi_text, "direction, comma-separated")->required();

    auto* c_self = app.add_subcommand("selfcheck", "run all oracle cross-validations");
    (void)c_self;

    CLI11_PARSE(app, argc, argv);

    try {
        QuadratureConfig cfg;
        if (tol > 0.0) cfg.rel_tol = tol;

        if (c_self->parsed()) return run_selfcheck();

        if (c_sections->parsed()) {
            auto body = load_body(body_path);
            auto sf = section_function(body, Direction::of(parse_xi(xi_text)), cfg);
            std::ostringstream os;
            write_section_csv(os, sf, parse_grid(grid_text));
            write_atomic(out_path, os.str());
            return 0;
        }
        if (c_frac->parsed()) {
            auto body = load_body(body_path);
            auto sf = section_function(body, Direction::of(parse_xi(xi_text)), cfg);
            std::vector<FractionalValue> rows;
            for (double q : parse_list("--q", q_text))
                rows.push_back(fractional_section_derivative(sf, q, cfg));
            std::ostringstream os;
            write_fractional_csv(os, rows);
            write_atomic(out_path, os.str());
            return 0;
        }
        if (c_fourier->parsed()) {
            auto body = load_body(body_path);
            auto sf = section_function(body, Direction::of(parse_xi(xi_text)), cfg);
            std::vector<std::pair<FourierValue, double>> rows;
            if (c_fourier->count("--k") > 0) {
                rows.emplace_back(radial_power_ft_odd(sf, k, cfg),
                                  ball_oracle(body, k));
            } else {
                for (double q : parse_list("--q", q_text)) {
                    FourierValue fv;
                    try {
                        fv = radial_power_ft(sf, q, cfg);
                    } catch (const redirect_error& e) {
                        fv = radial_power_ft_odd(sf, e.odd_k(), cfg);
                    }
                    rows.emplace_back(fv, ball_oracle(body, q));
                }
            }
            std::ostringstream os;
            write_fourier_csv(os, rows);
            write_atomic(out_path, os.str());
            return 0;
        }
        if (c_certify->parsed()) {
            auto body = load_body(body_path);
            auto cert = certify_intersection(body, directions, seed, cfg);
            std::ostringstream os;
            write_certificate_json(os, cert, body);
            write_atomic(out_path, os.str());
            return 0;
        }
        if (c_counter->parsed()) {
            if (!(epsilon > 0.0 && epsilon < 1.0))
                throw domain_error("--epsilon must lie in (0, 1)");
            auto body = make_counterexample_body(epsilon);
            auto integral = bp_integral(epsilon, cfg);
            auto cert = certify_intersection(body, directions, seed, cfg);
            json j = certificate_json(cert, body);
            j["epsilon"] = epsilon;
            j["profile_root"] = quartic_profile_root(epsilon);
            j["integral"] = integral.value;
            j["integral_core"] = integral.core;
            j["integral_tail"] = integral.tail;
            j["threshold"] = bp_threshold(cfg);
            write_atomic(out_path, j.dump(2) + "\n");
            return 0;
        }
        if (c_radon->parsed()) {
            auto body = load_body(body_path);
            Direction xi = Direction::of(parse_xi(xi_text));
            double inv = inverse_radon_3d(body, xi, cfg);
            auto rel = radon_fourier_relation_check(body, xi, cfg);
            json j;
            j["inverse_radon"] = inv;
            j["identity_lhs"] = rel.lhs;
            j["identity_rhs"] = rel.rhs;
            j["rel_err"] =
                std::abs(rel.lhs - rel.rhs) / std::max(std::abs(rel.rhs), 1e-300);
            j["body"] = body_json(body);
            write_atomic(out_path, j.dump(2) + "\n");
            return 0;
        }
    } catch (const accuracy_error& e) {
        std::cerr << "accuracy error: " << e.what()
                  << " (partial=" << num17(e.partial())
                  << ", err_est=" << num17(e.err_est()) << ")\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
