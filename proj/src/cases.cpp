#include "sgehom/cases.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <set>
#include <sstream>

#include "sgehom/admissibility.hpp"
#include "sgehom/tables.hpp"

namespace sgehom {

using nlohmann::json;

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};

const json& require_object(const json& j, const std::string& ctx) {
    if (!j.is_object()) throw ConfigError(ctx + ": expected an object");
    return j;
}

void check_keys(const json& j, const std::set<std::string>& allowed, const std::string& ctx) {
    for (const auto& [k, v] : j.items())
        if (!allowed.count(k)) throw ConfigError(ctx + ": unknown key '" + k + "'");
}

std::set<std::string> keys_of(const json& j) {
    std::set<std::string> out;
    for (const auto& [k, v] : j.items()) out.insert(k);
    return out;
}

double number(const json& j, const std::string& key, const std::string& ctx) {
    if (!j.contains(key)) throw ConfigError(ctx + ": missing '" + key + "'");
    const json& v = j.at(key);
    if (!v.is_number()) throw ConfigError(ctx + "." + key + ": expected a number");
    const double x = v.get<double>();
    if (!std::isfinite(x)) throw ConfigError(ctx + "." + key + ": must be finite");
    return x;
}

int parse_sides(const json& v, const std::string& ctx) {
    if (v.is_string() && (v == "inf" || v == "infinity")) return kCircleSides;
    if (v.is_number_integer()) return v.get<int>();
    throw ConfigError(ctx + ": expected an integer or \"inf\"");
}

IsotropicModuli parse_isotropic(const json& j, Regime r, const std::string& ctx) {
    require_object(j, ctx);
    const auto keys = keys_of(j);
    IsotropicModuli m;
    if (keys == std::set<std::string>{"lambda", "mu"}) {
        m = {number(j, "lambda", ctx), number(j, "mu", ctx), r};
    } else if (keys == std::set<std::string>{"nu", "mu"}) {
        try {
            m = from_poisson(number(j, "nu", ctx), number(j, "mu", ctx), r);
        } catch (const DomainError& e) {
            throw DomainError(ctx + ": " + e.what());
        }
    } else {
        throw ConfigError(ctx + ": expected exactly {lambda, mu} or {nu, mu}");
    }
    return m;
}

IsotropicModuli parse_inclusion(const json& j, const IsotropicModuli& matrix, const std::string& ctx) {
    if (j.is_string()) {
        if (j == "void") return IsotropicModuli::void_phase(matrix.regime);
        throw ConfigError(ctx + ": expected \"void\" or an object");
    }
    require_object(j, ctx);
    if (keys_of(j) == std::set<std::string>{"mu_ratio", "nu"}) {
        const double ratio = number(j, "mu_ratio", ctx);
        const double nu = number(j, "nu", ctx);
        if (ratio < 0.0) throw DomainError(ctx + ".mu_ratio: must be >= 0");
        if (!(nu > -1.0 && nu < 0.5)) throw DomainError(ctx + ".nu: nonphysical Poisson ratio");
        const double mu2 = ratio * matrix.mu;
        return {2.0 * mu2 * nu / (1.0 - 2.0 * nu), mu2, matrix.regime};
    }
    return parse_isotropic(j, matrix.regime, ctx);
}

std::string shape_name(const RveShape& s) {
    return std::visit(overloaded{[](const Circle&) { return std::string("circle"); },
                                 [](const RegularPolygon& p) {
                                     if (p.n == 4) return std::string("square");
                                     if (p.n == 6) return std::string("hexagon");
                                     return std::string("regular_polygon");
                                 },
                                 [](const ConvexPolygon&) { return std::string("polygon"); },
                                 [](const Sphere&) { return std::string("sphere"); },
                                 [](const Cube&) { return std::string("cube"); },
                                 [](const TruncatedOctahedron&) { return std::string("truncated_octahedron"); }},
                      s);
}

struct Evaluation {
    json discrepancy;
    HigherOrderConstants constants;
    json equivalent_local;
    Tensor4 disc_tensor{2};
    Tensor6 a_generic{2};
    double representation_residual = 0.0;
    bool closed_form_nd = false;
    DefinitenessReport disc_spectral;
    DefinitenessReport sge_spectral;
    std::vector<std::string> warnings;
};

Evaluation evaluate(const CompositeCase& c) {
    Evaluation ev;
    const int dim = dimension_of(c.regime);
    const double f = c.f, rho = c.rho;
    auto iso_block = [&](const IsoDiscrepancy& d) {
        const auto& m = std::get<IsotropicModuli>(c.matrix);
        ev.discrepancy = {{"lambda_t", d.lambda_t}, {"mu_t", d.mu_t}, {"K_t", d.K_t}};
        ev.constants = iso_constants(d.lambda_t, d.mu_t, f, rho, dim);
        ev.disc_tensor = d.tensor();
        ev.closed_form_nd = iso_nd_check(d.K_t, d.mu_t);
        ev.equivalent_local = {{"lambda_eq", m.lambda + f * d.lambda_t},
                               {"mu_eq", m.mu + f * d.mu_t},
                               {"K_eq", bulk_modulus(m) + f * d.K_t}};
    };

    switch (c.kind) {
        case CaseKind::CylindricalInclusion:
            iso_block(cylindrical_inclusion(std::get<IsotropicModuli>(c.matrix), *c.inclusion));
            break;
        case CaseKind::SphericalInclusion:
            iso_block(spherical_inclusion(std::get<IsotropicModuli>(c.matrix), *c.inclusion));
            break;
        case CaseKind::PolygonalHole:
            iso_block(polygonal_hole(std::get<IsotropicModuli>(c.matrix), c.n));
            break;
        case CaseKind::SquareHoleRandom:
            iso_block(square_hole_random(std::get<IsotropicModuli>(c.matrix)));
            break;
        case CaseKind::SquareHoleAligned: {
            const auto& m = std::get<IsotropicModuli>(c.matrix);
            const CubicDiscrepancy d = square_hole_aligned(m);
            ev.discrepancy = {{"lambda_t", d.lambda_t}, {"mu_t", d.mu_t}, {"xi_t", d.xi_t}, {"K_t", d.K_t()}};
            ev.constants = cubic_constants(d, f, rho);
            ev.disc_tensor = d.tensor();
            ev.closed_form_nd = cubic_nd_check(d.K_t(), d.mu_t, d.xi_t);
            ev.equivalent_local = {{"lambda_eq", m.lambda + f * d.lambda_t},
                                   {"mu_eq", m.mu + f * d.mu_t},
                                   {"xi_eq", f * d.xi_t},
                                   {"K_eq", bulk_modulus(m) + f * d.K_t()}};
            break;
        }
        case CaseKind::OrthoCircularHole: {
            const auto& m = std::get<OrthotropicModuli2D>(c.matrix);
            const OrthoHoleResult r = ortho_circular_hole(m);
            ev.discrepancy = {{"lambda_t", r.disc.lambda_t},
                              {"mu_t", r.disc.mu_t},
                              {"xi_t", r.disc.xi_III},
                              {"omega_t", r.disc.omega_I},
                              {"aux",
                               {{"Gamma", r.aux.Gamma}, {"Delta", r.aux.Delta}, {"gamma", r.aux.gamma},
                                {"delta", r.aux.delta}}},
                              {"near_singular", r.near_singular}};
            ev.constants = ortho_constants(r.disc, f, rho, 2);
            ev.disc_tensor = r.tensor();
            ev.closed_form_nd = ortho_nd_check(r.disc, Regime::PlaneStrain);
            ev.equivalent_local = {{"lambda_eq", m.lambda + f * r.disc.lambda_t},
                                   {"mu_eq", m.mu + f * r.disc.mu_t},
                                   {"xi_eq", m.xi + f * r.disc.xi_III},
                                   {"omega_eq", m.omega + f * r.disc.omega_I}};
            if (r.near_singular) ev.warnings.push_back("near-singular denominator in the orthotropic hole solution");
            break;
        }
    }

    ev.a_generic = assemble_generic(ev.disc_tensor, f, rho);
    ev.representation_residual = max_abs_diff(ev.a_generic, assemble_from_constants(ev.constants));
    ev.disc_spectral = spectral_nd_tensor4(ev.disc_tensor);
    ev.sge_spectral = spectral_pd_tensor6(ev.a_generic);
    if (f > kDiluteWarningFraction)
        ev.warnings.push_back("f = " + format_number(f) + " exceeds " + format_number(kDiluteWarningFraction) +
                              ": dilute assumption strained");
    if (ev.closed_form_nd != ev.disc_spectral.definite)
        ev.warnings.push_back("closed-form and spectral negative-definiteness verdicts disagree; spectral is trusted");
    return ev;
}

Evaluation evaluate_named(const CompositeCase& c) {
    try {
        return evaluate(c);
    } catch (const DomainError& e) {
        throw DomainError("case " + std::string(to_string(c.kind)) + ": " + e.what());
    }
}

json constants_json(const HigherOrderConstants& h) {
    json out = json::object();
    for (int k = 1; k <= 12; ++k) out["a" + std::to_string(k)] = h[k];
    return out;
}

json report_json(const DefinitenessReport& r) {
    return {{"definite", r.definite},
            {"marginal", r.marginal},
            {"min_eigenvalue", r.min_eigenvalue},
            {"max_eigenvalue", r.max_eigenvalue}};
}

json matrix_json(const CompositeCase& c) {
    return std::visit(overloaded{[](const IsotropicModuli& m) {
                                     return json{{"lambda", m.lambda}, {"mu", m.mu}, {"K", bulk_modulus(m)}};
                                 },
                                 [](const OrthotropicModuli2D& m) {
                                     return json{{"lambda", m.lambda}, {"mu", m.mu}, {"xi", m.xi}, {"omega", m.omega}};
                                 }},
                      c.matrix);
}

double grid_value(const SweepConfig& s, int k) {
    if (k == s.points - 1) return s.hi;
    return s.lo + (s.hi - s.lo) * k / (s.points - 1);
}

bool is_inclusion_case(CaseKind k) { return k == CaseKind::CylindricalInclusion || k == CaseKind::SphericalInclusion; }

void parse_phases(const json& config, CompositeCase& c) {
    if (c.kind == CaseKind::OrthoCircularHole) {
        const json& m = require_object(config.at("matrix"), "matrix");
        if (keys_of(m) != std::set<std::string>{"lambda", "mu", "xi", "omega"})
            throw ConfigError("matrix: orthotropic matrix needs exactly {lambda, mu, xi, omega}");
        c.matrix = OrthotropicModuli2D{number(m, "lambda", "matrix"), number(m, "mu", "matrix"),
                                       number(m, "xi", "matrix"), number(m, "omega", "matrix")};
        if (!(c.matrix_mu() > 0.0)) throw DomainError("matrix.mu: must be positive");
    } else {
        const IsotropicModuli m = parse_isotropic(config.at("matrix"), c.regime, "matrix");
        if (!m.is_physical()) throw DomainError("matrix: requires mu > 0 and K > 0");
        c.matrix = m;
    }

    if (is_inclusion_case(c.kind)) {
        if (!config.contains("inclusion")) throw ConfigError("config: missing 'inclusion'");
        c.inclusion = parse_inclusion(config.at("inclusion"), std::get<IsotropicModuli>(c.matrix), "inclusion");
    } else if (config.contains("inclusion")) {
        const json& inc = config.at("inclusion");
        if (!(inc.is_string() && inc == "void"))
            throw ConfigError("inclusion: case " + std::string(to_string(c.kind)) + " only admits \"void\"");
    }
}

}  // namespace

std::string format_number(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

std::string_view to_string(CaseKind k) {
    switch (k) {
        case CaseKind::CylindricalInclusion: return "cylindrical_inclusion";
        case CaseKind::SphericalInclusion: return "spherical_inclusion";
        case CaseKind::PolygonalHole: return "polygonal_hole";
        case CaseKind::SquareHoleAligned: return "square_hole_aligned";
        case CaseKind::SquareHoleRandom: return "square_hole_random";
        case CaseKind::OrthoCircularHole: return "ortho_circular_hole";
    }
    return "";
}

CaseKind case_kind_from_string(std::string_view s) {
    for (auto k : {CaseKind::CylindricalInclusion, CaseKind::SphericalInclusion, CaseKind::PolygonalHole,
                   CaseKind::SquareHoleAligned, CaseKind::SquareHoleRandom, CaseKind::OrthoCircularHole})
        if (to_string(k) == s) return k;
    throw ConfigError("unknown case '" + std::string(s) + "'");
}

Regime regime_of(CaseKind k) { return k == CaseKind::SphericalInclusion ? Regime::ThreeD : Regime::PlaneStrain; }

double CompositeCase::matrix_mu() const {
    return std::visit([](const auto& m) { return m.mu; }, matrix);
}

RveShape parse_shape(const json& spec) {
    require_object(spec, "rve");
    if (!spec.contains("shape") || !spec.at("shape").is_string()) throw ConfigError("rve: missing 'shape'");
    const std::string name = spec.at("shape");
    const std::string ctx = "rve(" + name + ")";
    auto only = [&](std::set<std::string> keys) {
        keys.insert("shape");
        check_keys(spec, keys, ctx);
    };
    if (name == "circle") {
        only({"radius"});
        return Circle{number(spec, "radius", ctx)};
    }
    if (name == "square" || name == "hexagon") {
        only({"side"});
        return RegularPolygon{name == "square" ? 4 : 6, number(spec, "side", ctx)};
    }
    if (name == "regular_polygon") {
        only({"n", "side"});
        if (!spec.contains("n") || !spec.at("n").is_number_integer()) throw ConfigError(ctx + ".n: expected an integer");
        return RegularPolygon{spec.at("n").get<int>(), number(spec, "side", ctx)};
    }
    if (name == "polygon") {
        only({"vertices"});
        if (!spec.contains("vertices") || !spec.at("vertices").is_array())
            throw ConfigError(ctx + ".vertices: expected an array of [x, y]");
        ConvexPolygon p;
        for (const auto& v : spec.at("vertices")) {
            if (!v.is_array() || v.size() != 2 || !v[0].is_number() || !v[1].is_number())
                throw ConfigError(ctx + ".vertices: expected an array of [x, y]");
            p.vertices.push_back({v[0].get<double>(), v[1].get<double>()});
        }
        return p;
    }
    if (name == "sphere") {
        only({"radius"});
        return Sphere{number(spec, "radius", ctx)};
    }
    if (name == "cube") {
        only({"side"});
        return Cube{number(spec, "side", ctx)};
    }
    if (name == "truncated_octahedron") {
        only({"edge"});
        return TruncatedOctahedron{number(spec, "edge", ctx)};
    }
    throw ConfigError("rve: unknown shape '" + name + "'");
}

CompositeCase parse_case(const json& config) {
    require_object(config, "config");
    check_keys(config, {"case", "regime", "matrix", "inclusion", "f", "rve", "n"}, "config");
    if (!config.contains("case") || !config.at("case").is_string()) throw ConfigError("config: missing 'case'");

    CompositeCase c;
    c.kind = case_kind_from_string(config.at("case").get<std::string>());
    c.regime = regime_of(c.kind);
    if (config.contains("regime")) {
        if (!config.at("regime").is_string()) throw ConfigError("config.regime: expected a string");
        if (regime_from_string(config.at("regime").get<std::string>()) != c.regime)
            throw ConfigError("config.regime: case " + std::string(to_string(c.kind)) + " requires " +
                              std::string(to_string(c.regime)));
    }

    if (!config.contains("matrix")) throw ConfigError("config: missing 'matrix'");
    try {
        parse_phases(config, c);
    } catch (const DomainError& e) {
        throw DomainError("case " + std::string(to_string(c.kind)) + ": " + e.what());
    }

    if (!config.contains("f")) throw ConfigError("config: missing 'f'");
    c.f = number(config, "f", "config");
    if (!(c.f > 0.0 && c.f < 1.0)) throw ConfigError("config.f: must lie in (0, 1)");

    if (!config.contains("rve")) throw ConfigError("config: missing 'rve'");
    const json& rve = require_object(config.at("rve"), "rve");
    if (rve.contains("rho")) {
        check_keys(rve, {"rho"}, "rve");
        c.rho = number(rve, "rho", "rve");
        if (!(c.rho > 0.0)) throw ConfigError("rve.rho: must be positive");
    } else {
        c.rve_shape = parse_shape(rve);
        if (shape_dimension(*c.rve_shape) != dimension_of(c.regime))
            throw ConfigError("rve: shape dimension does not match the " + std::string(to_string(c.regime)) +
                              " regime");
        c.rho = radius_of_inertia(*c.rve_shape);
    }

    if (c.kind == CaseKind::PolygonalHole) {
        if (!config.contains("n")) throw ConfigError("config: polygonal_hole requires 'n'");
        c.n = parse_sides(config.at("n"), "config.n");
    } else if (config.contains("n")) {
        throw ConfigError("config.n: only valid for polygonal_hole");
    }
    return c;
}

json run_case(const CompositeCase& c, const CaseOptions& opt) {
    const Evaluation ev = evaluate_named(c);
    const double scale = c.f * c.rho * c.rho * c.matrix_mu();
    json out;
    out["case"] = to_string(c.kind);
    out["regime"] = to_string(c.regime);
    out["f"] = c.f;
    out["rho"] = c.rho;
    if (c.rve_shape) out["rve_shape"] = shape_name(*c.rve_shape);
    if (c.kind == CaseKind::PolygonalHole) out["n"] = c.n == kCircleSides ? json("inf") : json(c.n);
    out["matrix"] = matrix_json(c);
    if (c.inclusion)
        out["inclusion"] = {{"lambda", c.inclusion->lambda}, {"mu", c.inclusion->mu}, {"K", bulk_modulus(*c.inclusion)}};
    out["discrepancy"] = ev.discrepancy;
    out["constants"] = {{"raw", constants_json(ev.constants)},
                        {"normalized", constants_json(ev.constants.normalized(scale))},
                        {"normalization", "f rho^2 mu1"},
                        {"representation", to_string(ev.constants.symmetry)},
                        {"representation_residual", ev.representation_residual}};
    out["equivalent_local"] = ev.equivalent_local;
    out["definiteness"] = {{"discrepancy_negative_definite",
                            {{"closed_form", ev.closed_form_nd}, {"spectral", report_json(ev.disc_spectral)}}},
                           {"sge_positive_definite", {{"spectral", report_json(ev.sge_spectral)}}}};
    out["symmetry_class"] = to_string(detect_symmetry(ev.a_generic, opt.symmetry_tol));
    out["warnings"] = ev.warnings;
    return out;
}

json run_case(const json& config, const CaseOptions& opt) { return run_case(parse_case(config), opt); }

json run_check(const json& config, const CaseOptions& opt) {
    const json full = run_case(config, opt);
    return {{"case", full["case"]},
            {"regime", full["regime"]},
            {"definiteness", full["definiteness"]},
            {"symmetry_class", full["symmetry_class"]},
            {"warnings", full["warnings"]}};
}

SweepConfig parse_sweep(const json& config) {
    require_object(config, "sweep");
    check_keys(config, {"case", "variable", "range", "points", "fixed"}, "sweep");
    if (!config.contains("case") || !config.at("case").is_string()) throw ConfigError("sweep: missing 'case'");
    SweepConfig s;
    s.kind = case_kind_from_string(config.at("case").get<std::string>());
    if (s.kind == CaseKind::OrthoCircularHole) throw ConfigError("sweep: ortho_circular_hole has no sweep variable");

    if (!config.contains("variable") || !config.at("variable").is_string())
        throw ConfigError("sweep: missing 'variable'");
    const std::string var = config.at("variable");
    if (var == "mu_ratio") {
        if (!is_inclusion_case(s.kind)) throw ConfigError("sweep.variable: mu_ratio needs an inclusion case");
        s.variable = SweepVariable::MuRatio;
    } else if (var == "nu1") {
        s.variable = SweepVariable::Nu1;
    } else {
        throw ConfigError("sweep.variable: expected mu_ratio or nu1");
    }

    if (!config.contains("range") || !config.at("range").is_array() || config.at("range").size() != 2 ||
        !config.at("range")[0].is_number() || !config.at("range")[1].is_number())
        throw ConfigError("sweep.range: expected [lo, hi]");
    s.lo = config.at("range")[0].get<double>();
    s.hi = config.at("range")[1].get<double>();
    if (!(s.lo < s.hi)) throw ConfigError("sweep.range: requires lo < hi");
    if (!config.contains("points") || !config.at("points").is_number_integer())
        throw ConfigError("sweep.points: expected an integer");
    s.points = config.at("points").get<int>();
    if (s.points < 2) throw ConfigError("sweep.points: requires at least 2");

    if (config.contains("fixed")) {
        const json& fx = require_object(config.at("fixed"), "sweep.fixed");
        check_keys(fx, {"nu1", "nu2", "mu1", "mu_ratio", "f", "rho", "n"}, "sweep.fixed");
        if (fx.contains("nu1")) s.nu1 = number(fx, "nu1", "sweep.fixed");
        if (fx.contains("nu2")) s.nu2 = number(fx, "nu2", "sweep.fixed");
        if (fx.contains("mu1")) s.mu1 = number(fx, "mu1", "sweep.fixed");
        if (fx.contains("mu_ratio")) s.mu_ratio = number(fx, "mu_ratio", "sweep.fixed");
        if (fx.contains("f")) s.f = number(fx, "f", "sweep.fixed");
        if (fx.contains("rho")) s.rho = number(fx, "rho", "sweep.fixed");
        if (fx.contains("n")) s.n = parse_sides(fx.at("n"), "sweep.fixed.n");
    }
    if (!(s.f > 0.0 && s.f < 1.0)) throw ConfigError("sweep.fixed.f: must lie in (0, 1)");
    if (!(s.rho > 0.0)) throw ConfigError("sweep.fixed.rho: must be positive");
    if (!(s.mu1 > 0.0)) throw ConfigError("sweep.fixed.mu1: must be positive");
    return s;
}

SweepResult run_sweep(const SweepConfig& s) {
    const bool inclusion = is_inclusion_case(s.kind);
    const bool cubic = s.kind == CaseKind::SquareHoleAligned;
    const Regime regime = regime_of(s.kind);

    std::ostringstream os;
    os << (s.variable == SweepVariable::MuRatio ? "mu_ratio" : "nu1") << ",a2_norm,a4_norm";
    if (cubic) os << ",a6_norm";
    os << ",pd";
    if (inclusion) os << ",threshold";
    os << '\n';

    SweepResult res;
    for (int k = 0; k < s.points; ++k) {
        const double x = grid_value(s, k);
        try {
            const double nu1 = s.variable == SweepVariable::Nu1 ? x : s.nu1;
            const double ratio = s.variable == SweepVariable::MuRatio ? x : s.mu_ratio;
            CompositeCase c;
            c.kind = s.kind;
            c.regime = regime;
            const IsotropicModuli m = from_poisson(nu1, s.mu1, regime);
            c.matrix = m;
            if (inclusion) {
                if (!(s.nu2 > -1.0 && s.nu2 < 0.5)) throw DomainError("nonphysical Poisson ratio nu2");
                if (ratio < 0.0) throw DomainError("mu_ratio must be >= 0");
                const double mu2 = ratio * s.mu1;
                c.inclusion = IsotropicModuli{2.0 * mu2 * s.nu2 / (1.0 - 2.0 * s.nu2), mu2, regime};
            }
            c.f = s.f;
            c.rho = s.rho;
            c.n = s.n;
            const Evaluation ev = evaluate_named(c);
            const HigherOrderConstants a = ev.constants.normalized(s.f * s.rho * s.rho * s.mu1);
            std::ostringstream row;
            row << format_number(x) << ',' << format_number(a[2]) << ',' << format_number(a[4]);
            if (cubic) row << ',' << format_number(a[6]);
            row << ',' << (ev.sge_spectral.definite ? 1 : 0);
            if (inclusion) row << ',' << format_number(pd_threshold(nu1, s.nu2, regime));
            os << row.str() << '\n';
            ++res.rows;
        } catch (const DomainError& e) {
            res.error = "grid point " + std::to_string(k) + " (" +
                        (s.variable == SweepVariable::MuRatio ? std::string("mu_ratio") : std::string("nu1")) +
                        " = " + format_number(x) + "): " + e.what();
            break;
        }
    }
    res.csv = os.str();
    return res;
}

json reproduce_tables(const TableOptions& opt) {
    json out;
    json t1 = json::array();
    bool t1_pass = true;
    for (const auto& row : tables::kPolygonConstants) {
        const PolygonConstants pc = polygon_constants(row.n);
        const bool match = pc.A == row.A && pc.B == row.B;
        t1_pass = t1_pass && match;
        t1.push_back({{"n", row.n == kCircleSides ? json("inf") : json(row.n)},
                      {"A", pc.A},
                      {"B", pc.B},
                      {"match", match}});
    }
    out["polygon_constants"] = {{"rows", t1}, {"pass", t1_pass}};

    auto reference = [](std::string_view material, int orientation) {
        for (const auto& p : tables::ortho_reference())
            if (p.material == material && p.orientation == orientation) return p.values;
        throw DomainError("no reference row");
    };

    json rows = json::array();
    double max_dev = 0.0, max_literal = 0.0;
    int failed = 0;
    for (const auto& in : tables::ortho_inputs()) {
        json row = {{"material", in.material}, {"input_orientation", in.orientation}};
        try {
            const OrthoHoleResult r = ortho_circular_hole(in.moduli);
            const HigherOrderConstants a = ortho_constants(r.disc, 1.0, 1.0, 2).normalized(in.moduli.mu);
            const auto computed = tables::to_reference_layout(a[2], a[4], a[6], a[9]);
            const int target = tables::reference_orientation_for_input(in.orientation);
            const auto expect = reference(in.material, target);
            const auto literal = reference(in.material, in.orientation);
            std::array<double, 4> dev{}, ldev{};
            bool pass = true;
            for (int k = 0; k < 4; ++k) {
                dev[k] = std::fabs(computed[k] - expect[k]);
                ldev[k] = std::fabs(computed[k] - literal[k]);
                max_dev = std::max(max_dev, dev[k]);
                max_literal = std::max(max_literal, ldev[k]);
                if (!(dev[k] <= opt.tolerance)) {
                    pass = false;
                    ++failed;
                }
            }
            row["reference_orientation"] = target;
            row["computed"] = computed;
            row["reference"] = expect;
            row["deviation"] = dev;
            row["literal_reference"] = literal;
            row["literal_deviation"] = ldev;
            row["near_singular"] = r.near_singular;
            row["pass"] = pass;
        } catch (const DomainError& e) {
            row["error"] = e.what();
            row["pass"] = false;
            failed += 4;
        }
        rows.push_back(row);
    }
    out["higher_order_constants"] = {{"columns", {"a2", "a4", "a6", "a9"}},
                                     {"tolerance", opt.tolerance},
                                     {"rows", rows},
                                     {"failed_cells", failed},
                                     {"max_deviation", max_dev},
                                     {"max_literal_deviation", max_literal},
                                     {"pass", failed == 0}};
    out["pass"] = t1_pass && failed == 0;
    return out;
}

json rve_query(const RveQuery& q) {
    json out;
    out["shape"] = shape_name(q.shape);
    out["dimension"] = shape_dimension(q.shape);
    out["measure"] = measure(q.shape);
    out["centroid"] = centroid(q.shape);
    out["specific_second_moment"] = specific_second_moment(q.shape);
    out["rho"] = radius_of_inertia(q.shape);
    out["rho_raw"] = radius_of_inertia(q.shape, RhoConvention::Raw);
    if (q.reference) {
        out["reference"] = {{"shape", shape_name(*q.reference)}, {"ratio", rve_ratio(q.shape, *q.reference)}};
    }
    if (q.mc_samples > 0) {
        const McEstimate mc = mc_second_moment(q.shape, q.mc_samples, q.seed);
        const double exact = specific_second_moment(q.shape);
        out["monte_carlo"] = {{"samples", q.mc_samples},
                              {"seed", q.seed},
                              {"proposals", mc.proposals},
                              {"estimate", mc.estimate},
                              {"std_error", mc.std_error},
                              {"z_score", (mc.estimate - exact) / mc.std_error}};
    }
    return out;
}

}  // namespace sgehom
