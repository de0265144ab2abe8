#include <doctest.h>

#include <sstream>

#include "sgehom/admissibility.hpp"
#include "sgehom/cases.hpp"
#include "sgehom/tables.hpp"

using namespace sgehom;
using nlohmann::json;

namespace {

std::vector<std::vector<std::string>> parse_csv(const std::string& text) {
    std::vector<std::vector<std::string>> rows;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        std::vector<std::string> cells;
        std::istringstream ls(line);
        std::string cell;
        while (std::getline(ls, cell, ',')) cells.push_back(cell);
        rows.push_back(cells);
    }
    return rows;
}

json base_cylinder() {
    return json::parse(R"({"case": "cylindrical_inclusion", "matrix": {"nu": 0.3, "mu": 1.0},
                           "inclusion": {"mu_ratio": 0.5, "nu": 0.2}, "f": 0.05, "rve": {"rho": 1.0}})");
}

SweepConfig cylinder_sweep(double nu2) {
    json j = {{"case", "cylindrical_inclusion"},
              {"variable", "mu_ratio"},
              {"range", {0.0, 1.0}},
              {"points", 11},
              {"fixed", {{"nu1", 0.0}, {"nu2", nu2}}}};
    return parse_sweep(j);
}

}  // namespace

TEST_SUITE("cli_core") {
    TEST_CASE("case names round trip") {
        for (const char* n : {"cylindrical_inclusion", "spherical_inclusion", "polygonal_hole", "square_hole_aligned",
                              "square_hole_random", "ortho_circular_hole"})
            CHECK(to_string(case_kind_from_string(n)) == n);
        CHECK_THROWS_AS(case_kind_from_string("ellipse"), ConfigError);
        CHECK(regime_of(CaseKind::SphericalInclusion) == Regime::ThreeD);
        CHECK(regime_of(CaseKind::PolygonalHole) == Regime::PlaneStrain);
    }

    TEST_CASE("olivine orientation reproduces its tabulated row") {
        const auto& in = tables::ortho_inputs()[0];
        json cfg = {{"case", "ortho_circular_hole"},
                    {"matrix", {{"lambda", in.moduli.lambda}, {"mu", in.moduli.mu}, {"xi", in.moduli.xi}, {"omega", in.moduli.omega}}},
                    {"f", 0.02},
                    {"rve", {{"rho", 1.7}}}};
        const json r = run_case(cfg);
        const json& a = r["constants"]["normalized"];
        // Tabulated under the orientation label 3 with the a9 column halved.
        CHECK(std::fabs(a["a2"].get<double>() - 3.254) <= 5e-3);
        CHECK(std::fabs(a["a4"].get<double>() - 1.497) <= 5e-3);
        CHECK(std::fabs(a["a9"].get<double>() / 2.0 - 0.858) <= 5e-3);
        CHECK(std::fabs(a["a6"].get<double>() - -0.780) <= 5e-3);
        CHECK(r["symmetry_class"] == "orthotropic");
        CHECK(r["definiteness"]["discrepancy_negative_definite"]["closed_form"] == true);
        CHECK(r["definiteness"]["discrepancy_negative_definite"]["spectral"]["definite"] == true);
        CHECK(r["definiteness"]["sge_positive_definite"]["spectral"]["definite"] == true);
        CHECK(r["constants"]["representation_residual"].get<double>() < 1e-13);
        CHECK(r["discrepancy"]["near_singular"] == false);
    }

    TEST_CASE("inclusion equal to the matrix") {
        json cfg = base_cylinder();
        cfg["inclusion"] = {{"nu", 0.3}, {"mu", 1.0}};
        const json r = run_case(cfg);
        CHECK(r["discrepancy"]["mu_t"].get<double>() == 0.0);
        CHECK(r["discrepancy"]["K_t"].get<double>() == 0.0);
        for (int k = 1; k <= 12; ++k) CHECK(r["constants"]["raw"]["a" + std::to_string(k)].get<double>() == 0.0);
        CHECK(r["definiteness"]["sge_positive_definite"]["spectral"]["definite"] == false);
        CHECK(r["definiteness"]["sge_positive_definite"]["spectral"]["marginal"] == true);
    }

    TEST_CASE("spherical void raw constants") {
        const json r = run_case(json::parse(R"({"case": "spherical_inclusion", "matrix": {"nu": 0.0, "mu": 1.0},
                                                "inclusion": "void", "f": 0.1, "rve": {"rho": 1.0}})"));
        CHECK(r["constants"]["raw"]["a2"].get<double>() == doctest::Approx(-0.1 * 3.0 / 14.0).epsilon(1e-13));
        CHECK(r["constants"]["raw"]["a4"].get<double>() == doctest::Approx(0.1 * 15.0 / 14.0).epsilon(1e-13));
        CHECK(r["constants"]["raw"]["a5"] == r["constants"]["raw"]["a4"]);
        CHECK(r["regime"] == "three_d");
        CHECK(r["symmetry_class"] == "isotropic");
        CHECK(r["warnings"].empty());
    }

    TEST_CASE("equivalent local moduli") {
        const json r = run_case(json::parse(R"({"case": "cylindrical_inclusion", "matrix": {"lambda": 1.0, "mu": 1.0},
                                                "inclusion": "void", "f": 0.1, "rve": {"rho": 1.0}})"));
        const double K1 = 2.0, mu1 = 1.0;
        const double mu_t = -2.0 * mu1 * (K1 + mu1) / K1, K_t = -K1 * (K1 + mu1) / mu1;
        CHECK(r["equivalent_local"]["mu_eq"].get<double>() == doctest::Approx(mu1 + 0.1 * mu_t));
        CHECK(r["equivalent_local"]["lambda_eq"].get<double>() == doctest::Approx(1.0 + 0.1 * (K_t - mu_t)));
    }

    TEST_CASE("rve shapes in case configs") {
        json cfg = base_cylinder();
        cfg["rve"] = {{"shape", "circle"}, {"radius", 2.0}};
        CHECK(run_case(cfg)["rho"].get<double>() == doctest::Approx(2.0));
        cfg["rve"] = {{"shape", "cube"}, {"side", 2.0}};
        CHECK_THROWS_AS(parse_case(cfg), ConfigError);
    }

    TEST_CASE("polygonal and square holes") {
        json cfg = json::parse(R"({"case": "polygonal_hole", "matrix": {"nu": 0.0, "mu": 1.0}, "f": 0.05,
                                   "rve": {"rho": 1.0}, "n": 6})");
        CHECK(run_case(cfg)["discrepancy"]["K_t"].get<double>() == doctest::Approx(-1.5688 * 0.6712 * 2.0));
        cfg["n"] = "inf";
        // mu~ = -4 mu1 for the circular void at nu1 = 0, so a4 / (f rho^2 mu1) = 2.
        CHECK(run_case(cfg)["constants"]["normalized"]["a4"].get<double>() == doctest::Approx(2.0).epsilon(1e-12));
        cfg["n"] = 4;
        CHECK_THROWS_WITH_AS(run_case(cfg), doctest::Contains("case polygonal_hole"), DomainError);

        const json sq = run_case(json::parse(R"({"case": "square_hole_aligned", "matrix": {"nu": 0.0, "mu": 1.0},
                                                 "inclusion": "void", "f": 0.05, "rve": {"rho": 1.0}})"));
        CHECK(sq["constants"]["normalized"]["a6"].get<double>() == doctest::Approx(0.796).epsilon(1e-12));
        CHECK(sq["symmetry_class"] == "cubic");
        CHECK(sq["constants"]["representation"] == "cubic");
        const json rnd = run_case(json::parse(R"({"case": "square_hole_random", "matrix": {"nu": 0.2, "mu": 1.0},
                                                  "f": 0.05, "rve": {"rho": 1.0}})"));
        CHECK(rnd["symmetry_class"] == "isotropic");
    }

    TEST_CASE("dilute warning and check subset") {
        json cfg = base_cylinder();
        cfg["f"] = 0.3;
        const json r = run_case(cfg);
        REQUIRE(r["warnings"].size() == 1);
        CHECK(r["warnings"][0].get<std::string>().find("dilute") != std::string::npos);
        const json c = run_check(cfg);
        CHECK(c.contains("definiteness"));
        CHECK(c.contains("symmetry_class"));
        CHECK_FALSE(c.contains("constants"));
    }

    TEST_CASE("config errors") {
        auto with = [](const char* key, json v) {
            json c = base_cylinder();
            c[key] = std::move(v);
            return c;
        };
        CHECK_THROWS_AS(parse_case(json::array()), ConfigError);
        CHECK_THROWS_AS(parse_case(with("extra", 1)), ConfigError);
        CHECK_THROWS_AS(parse_case(with("f", 0.0)), ConfigError);
        CHECK_THROWS_AS(parse_case(with("f", 1.0)), ConfigError);
        CHECK_THROWS_AS(parse_case(with("f", "0.1")), ConfigError);
        CHECK_THROWS_AS(parse_case(with("n", 5)), ConfigError);
        CHECK_THROWS_AS(parse_case(with("regime", "3d")), ConfigError);
        CHECK_THROWS_AS(parse_case(with("case", "ellipse")), ConfigError);
        CHECK_THROWS_AS(parse_case(with("inclusion", json{{"mu_ratio", 0.5}, {"nu", 0.2}, {"mu", 1.0}})), ConfigError);
        CHECK_THROWS_AS(parse_case(with("inclusion", "rigid")), ConfigError);
        CHECK_THROWS_AS(parse_case(with("matrix", json{{"lambda", 1.0}, {"mu", 1.0}, {"xi", 0.0}, {"omega", 0.0}})),
                        ConfigError);
        CHECK_THROWS_AS(parse_case(with("rve", json{{"rho", -1.0}})), ConfigError);
        json missing = base_cylinder();
        missing.erase("inclusion");
        CHECK_THROWS_AS(parse_case(missing), ConfigError);
        json hole = json::parse(R"({"case": "square_hole_random", "matrix": {"nu": 0.2, "mu": 1.0},
                                    "inclusion": {"nu": 0.2, "mu": 1.0}, "f": 0.05, "rve": {"rho": 1.0}})");
        CHECK_THROWS_AS(parse_case(hole), ConfigError);
        json poly = json::parse(R"({"case": "polygonal_hole", "matrix": {"nu": 0.2, "mu": 1.0}, "f": 0.05,
                                    "rve": {"rho": 1.0}})");
        CHECK_THROWS_AS(parse_case(poly), ConfigError);
    }

    TEST_CASE("domain errors name the case") {
        json cfg = base_cylinder();
        cfg["matrix"] = {{"nu", 0.7}, {"mu", 1.0}};
        CHECK_THROWS_WITH_AS(parse_case(cfg), doctest::Contains("case cylindrical_inclusion"), DomainError);
        cfg = base_cylinder();
        cfg["inclusion"] = {{"lambda", -10.0}, {"mu", 1.0}};
        CHECK_THROWS_WITH_AS(run_case(cfg), doctest::Contains("case cylindrical_inclusion"), DomainError);
        json ortho = json::parse(R"({"case": "ortho_circular_hole",
                                     "matrix": {"lambda": 1.0, "mu": 1.0, "xi": 0.0, "omega": -2.0},
                                     "f": 0.05, "rve": {"rho": 1.0}})");
        CHECK_THROWS_WITH_AS(run_case(ortho), doctest::Contains("complex auxiliary"), DomainError);
    }

    TEST_CASE("sweep endpoints and threshold column") {
        const SweepResult r = run_sweep(cylinder_sweep(0.0));
        CHECK_FALSE(r.error);
        CHECK(r.rows == 11);
        const auto rows = parse_csv(r.csv);
        REQUIRE(rows.size() == 12);
        CHECK(rows[0] == std::vector<std::string>{"mu_ratio", "a2_norm", "a4_norm", "pd", "threshold"});
        CHECK(std::stod(rows[1][2]) == doctest::Approx(2.0).epsilon(1e-12));
        CHECK(std::fabs(std::stod(rows[11][2])) < 1e-12);
        for (std::size_t k = 2; k < rows.size(); ++k) CHECK(std::stod(rows[k][0]) > std::stod(rows[k - 1][0]));
        CHECK(r.csv.find('\r') == std::string::npos);

        const auto t = parse_csv(run_sweep(cylinder_sweep(0.4)).csv);
        json j = {{"case", "cylindrical_inclusion"}, {"variable", "mu_ratio"}, {"range", {0.0, 1.0}},
                  {"points", 11}, {"fixed", {{"nu1", 0.0}, {"nu2", 0.4}}}};
        for (std::size_t k = 1; k < t.size(); ++k) CHECK(std::stod(t[k][4]) == doctest::Approx(0.2).epsilon(1e-14));
        CHECK(run_sweep(parse_sweep(j)).csv == run_sweep(cylinder_sweep(0.4)).csv);
    }

    TEST_CASE("shear column does not depend on the inclusion Poisson ratio") {
        const auto a = parse_csv(run_sweep(cylinder_sweep(-0.5)).csv);
        const auto b = parse_csv(run_sweep(cylinder_sweep(0.4)).csv);
        REQUIRE(a.size() == b.size());
        for (std::size_t k = 1; k < a.size(); ++k) CHECK(a[k][2] == b[k][2]);
    }

    TEST_CASE("nu1 sweeps and partial output") {
        json j = {{"case", "square_hole_aligned"}, {"variable", "nu1"}, {"range", {-0.5, 0.45}}, {"points", 20}};
        const SweepResult ok = run_sweep(parse_sweep(j));
        CHECK(ok.rows == 20);
        CHECK(parse_csv(ok.csv)[0].size() == 5);
        CHECK(ok.csv.find("nan") == std::string::npos);
        CHECK(ok.csv.find("inf") == std::string::npos);

        j["range"] = {0.0, 0.6};
        j["points"] = 7;
        const SweepResult bad = run_sweep(parse_sweep(j));
        REQUIRE(bad.error);
        CHECK(bad.rows == 5);
        CHECK(bad.error->find("grid point 5") != std::string::npos);
        CHECK(parse_csv(bad.csv).size() == 6);
    }

    TEST_CASE("sweep config errors") {
        auto sweep = [](json patch) {
            json j = {{"case", "cylindrical_inclusion"}, {"variable", "mu_ratio"}, {"range", {0.0, 1.0}}, {"points", 3}};
            j.merge_patch(patch);
            return j;
        };
        CHECK_NOTHROW(parse_sweep(sweep(json::object())));
        CHECK_THROWS_AS(parse_sweep(sweep({{"points", 1}})), ConfigError);
        CHECK_THROWS_AS(parse_sweep(sweep({{"range", {1.0, 0.0}}})), ConfigError);
        CHECK_THROWS_AS(parse_sweep(sweep({{"variable", "f"}})), ConfigError);
        CHECK_THROWS_AS(parse_sweep(sweep({{"case", "polygonal_hole"}})), ConfigError);
        CHECK_THROWS_AS(parse_sweep(sweep({{"case", "ortho_circular_hole"}})), ConfigError);
        CHECK_THROWS_AS(parse_sweep(sweep({{"fixed", {{"f", 2.0}}}})), ConfigError);
        CHECK_THROWS_AS(parse_sweep(sweep({{"fixed", {{"bogus", 1.0}}}})), ConfigError);
    }

    TEST_CASE("table reproduction report") {
        const json t = reproduce_tables();
        CHECK(t["polygon_constants"]["pass"] == true);
        bool saw5 = false;
        for (const auto& row : t["polygon_constants"]["rows"])
            if (row["n"] == 5) {
                saw5 = true;
                CHECK(row["A"].get<double>() == 1.6198);
                CHECK(row["B"].get<double>() == 0.3233);
            }
        CHECK(saw5);
        const json& h = t["higher_order_constants"];
        CHECK(h["rows"].size() == 15);
        for (const auto& row : h["rows"]) {
            if (row["material"] == "canine_femora" && row["input_orientation"] == 1) {
                const auto c = row["computed"].get<std::vector<double>>();
                CHECK(std::fabs(c[0] - 4.273) <= 5e-3);
                CHECK(std::fabs(c[1] - 1.660) <= 5e-3);
            }
            if (row["material"] == "olivinite" && row["input_orientation"] == 2) {
                const auto c = row["computed"].get<std::vector<double>>();
                const double expect[4] = {4.398, 1.414, 0.804, -0.675};
                for (int k = 0; k < 4; ++k) CHECK(std::fabs(c[k] - expect[k]) <= 5e-3);
            }
        }
        CHECK(t["pass"] == (h["failed_cells"] == 0));
        CHECK(reproduce_tables({1.0})["higher_order_constants"]["pass"] == true);
    }

    TEST_CASE("shape parsing and rve queries") {
        CHECK(std::holds_alternative<Circle>(parse_shape({{"shape", "circle"}, {"radius", 2.0}})));
        CHECK_THROWS_AS(parse_shape({{"shape", "circle"}, {"side", 2.0}}), ConfigError);
        CHECK_THROWS_AS(parse_shape({{"shape", "torus"}}), ConfigError);
        CHECK_THROWS_AS(parse_shape({{"shape", "polygon"}, {"vertices", {1, 2}}}), ConfigError);

        const json c = rve_query({Circle{2.0}, std::nullopt, 0, 0});
        CHECK(c["rho"].get<double>() == doctest::Approx(2.0));
        CHECK_FALSE(c.contains("monte_carlo"));
        const json s = rve_query({RegularPolygon{4, 1.0}, RegularPolygon{6, 1.0}, 0, 0});
        CHECK(s["reference"]["ratio"].get<double>() == doctest::Approx(1.039).epsilon(1e-3));
        const json q = rve_query({Cube{1.0}, TruncatedOctahedron{1.0}, 20000, 11});
        CHECK(q["reference"]["ratio"].get<double>() == doctest::Approx(1.061).epsilon(1e-3));
        CHECK(std::fabs(q["monte_carlo"]["z_score"].get<double>()) < 4.0);
        CHECK(rve_query({Cube{1.0}, TruncatedOctahedron{1.0}, 20000, 11}).dump() == q.dump());
    }

    TEST_CASE("number formatting") {
        CHECK(format_number(0.2) == "0.2");
        CHECK(format_number(1.0 / 3.0) == "0.333333333333");
        CHECK(format_number(-1.5e-20) == "-1.5e-20");
    }
}
