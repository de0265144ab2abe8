#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "sgehom/cases.hpp"

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitConfig = 1;
constexpr int kExitDomain = 2;
constexpr int kExitTables = 3;

json read_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw sgehom::ConfigError("cannot open '" + path + "'");
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw sgehom::ConfigError("'" + path + "' is not valid JSON: " + e.what());
    }
}

json shape_spec(const std::string& name, std::optional<double> radius, std::optional<double> side,
                std::optional<int> n, std::optional<double> edge, const std::string& vertices) {
    json spec{{"shape", name}};
    if (radius) spec["radius"] = *radius;
    if (side) spec["side"] = *side;
    if (n) spec["n"] = *n;
    if (edge) spec["edge"] = *edge;
    if (!vertices.empty()) {
        json pts = json::array();
        std::stringstream all(vertices);
        std::string pair;
        while (std::getline(all, pair, ';')) {
            const auto comma = pair.find(',');
            if (comma == std::string::npos) throw sgehom::ConfigError("--vertices: expected 'x,y;x,y;...'");
            try {
                pts.push_back({std::stod(pair.substr(0, comma)), std::stod(pair.substr(comma + 1))});
            } catch (const std::exception&) {
                throw sgehom::ConfigError("--vertices: cannot parse '" + pair + "'");
            }
        }
        spec["vertices"] = pts;
    }
    return spec;
}

json unit_shape_spec(const std::string& name, std::optional<int> n) {
    if (name == "circle" || name == "sphere") return {{"shape", name}, {"radius", 1.0}};
    if (name == "square" || name == "hexagon" || name == "cube") return {{"shape", name}, {"side", 1.0}};
    if (name == "truncated_octahedron") return {{"shape", name}, {"edge", 1.0}};
    if (name == "regular_polygon") {
        if (!n) throw sgehom::ConfigError("--ref regular_polygon needs --ref-n");
        return {{"shape", name}, {"n", *n}, {"side", 1.0}};
    }
    throw sgehom::ConfigError("--ref: unsupported reference shape '" + name + "'");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Equivalent strain-gradient solids for dilute composites"};
    app.require_subcommand(1);
    app.fallthrough();

    std::uint64_t seed = 0;
    std::size_t mc_samples = 0;
    std::optional<double> tolerance;
    app.add_option("--seed", seed, "Seed for Monte Carlo sampling");
    app.add_option("--mc-samples", mc_samples, "Monte Carlo samples for the RVE cross-check (0 skips)");
    app.add_option("--tolerance", tolerance,
                   "Per-cell tolerance for 'tables reproduce' (default 5e-3); symmetry tolerance for 'case run' "
                   "and 'check' (default 1e-10)");

    std::string case_file;
    auto* case_cmd = app.add_subcommand("case", "Composite case reports");
    case_cmd->require_subcommand(1);
    auto* case_run = case_cmd->add_subcommand("run", "Run a case config and print a JSON report");
    case_run->add_option("file", case_file, "Case config (JSON)")->required();

    std::string sweep_file, sweep_out;
    auto* sweep_cmd = app.add_subcommand("sweep", "Parameter sweep to CSV");
    sweep_cmd->add_option("file", sweep_file, "Sweep config (JSON)")->required();
    sweep_cmd->add_option("-o,--output", sweep_out, "Output CSV (stdout when omitted)");

    std::string shape, ref, vertices;
    std::optional<double> radius, side, edge;
    std::optional<int> sides, ref_sides;
    auto* rve_cmd = app.add_subcommand("rve", "RVE radius of inertia");
    rve_cmd->add_option("shape", shape,
                        "circle | square | hexagon | regular_polygon | polygon | sphere | cube | "
                        "truncated_octahedron")
        ->required();
    rve_cmd->add_option("--radius", radius);
    rve_cmd->add_option("--side", side);
    rve_cmd->add_option("--n", sides, "Number of sides for regular_polygon");
    rve_cmd->add_option("--edge", edge);
    rve_cmd->add_option("--vertices", vertices, "Counterclockwise 'x,y;x,y;...' for polygon");
    rve_cmd->add_option("--ref", ref, "Reference shape for the equal-measure rho^2 ratio");
    rve_cmd->add_option("--ref-n", ref_sides, "Sides of a regular_polygon reference");

    auto* tables_cmd = app.add_subcommand("tables", "Reference table reproduction");
    tables_cmd->require_subcommand(1);
    auto* tables_repro = tables_cmd->add_subcommand("reproduce", "Recompute every table cell");

    std::string check_file;
    auto* check_cmd = app.add_subcommand("check", "Definiteness and symmetry of a case");
    check_cmd->add_option("file", check_file, "Case config (JSON)")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kExitOk : kExitConfig;
    }

    try {
        if (case_run->parsed()) {
            sgehom::CaseOptions opt;
            if (tolerance) opt.symmetry_tol = *tolerance;
            std::cout << sgehom::run_case(read_json(case_file), opt).dump(2) << '\n';
            return kExitOk;
        }
        if (check_cmd->parsed()) {
            sgehom::CaseOptions opt;
            if (tolerance) opt.symmetry_tol = *tolerance;
            std::cout << sgehom::run_check(read_json(check_file), opt).dump(2) << '\n';
            return kExitOk;
        }
        if (sweep_cmd->parsed()) {
            const auto res = sgehom::run_sweep(sgehom::parse_sweep(read_json(sweep_file)));
            if (sweep_out.empty()) {
                std::cout << res.csv;
            } else {
                std::ofstream out(sweep_out, std::ios::binary);
                if (!out) throw sgehom::ConfigError("cannot write '" + sweep_out + "'");
                out << res.csv;
            }
            if (res.error) {
                std::cerr << "sweep stopped at " << *res.error << '\n';
                return kExitDomain;
            }
            return kExitOk;
        }
        if (rve_cmd->parsed()) {
            sgehom::RveQuery q{sgehom::parse_shape(shape_spec(shape, radius, side, sides, edge, vertices)),
                               std::nullopt, mc_samples, seed};
            if (!ref.empty()) q.reference = sgehom::parse_shape(unit_shape_spec(ref, ref_sides));
            std::cout << sgehom::rve_query(q).dump(2) << '\n';
            return kExitOk;
        }
        if (tables_repro->parsed()) {
            sgehom::TableOptions opt;
            if (tolerance) opt.tolerance = *tolerance;
            const json report = sgehom::reproduce_tables(opt);
            std::cout << report.dump(2) << '\n';
            return report.at("pass").get<bool>() ? kExitOk : kExitTables;
        }
    } catch (const sgehom::ConfigError& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return kExitConfig;
    } catch (const json::exception& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return kExitConfig;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitDomain;
    } catch (const std::domain_error& e) {
        std::cerr << "domain error: " << e.what() << '\n';
        return kExitDomain;
    }
    return kExitConfig;
}
