#pragma once

// Config-driven front end shared by the CLI and the Python module. Configs and
// reports are JSON; sweeps produce CSV text.

#include <cstdint>
#include <optional>
#include <string>
#include <variant>

#include <json.hpp>

#include "sgehom/assembly.hpp"
#include "sgehom/rve.hpp"

namespace sgehom {

enum class CaseKind {
    CylindricalInclusion,
    SphericalInclusion,
    PolygonalHole,
    SquareHoleAligned,
    SquareHoleRandom,
    OrthoCircularHole,
};

std::string_view to_string(CaseKind k);
CaseKind case_kind_from_string(std::string_view s);
Regime regime_of(CaseKind k);

// Threshold on f beyond which reports carry a dilute-assumption warning.
inline constexpr double kDiluteWarningFraction = 0.1;

struct CompositeCase {
    CaseKind kind = CaseKind::CylindricalInclusion;
    Regime regime = Regime::PlaneStrain;
    std::variant<IsotropicModuli, OrthotropicModuli2D> matrix;
    std::optional<IsotropicModuli> inclusion;  // nullopt for holes
    double f = 0.0;
    double rho = 1.0;
    std::optional<RveShape> rve_shape;
    int n = kCircleSides;

    double matrix_mu() const;
};

/// Validates and converts a case config. Throws ConfigError on schema
/// violations and DomainError on nonphysical moduli.
CompositeCase parse_case(const nlohmann::json& config);

struct CaseOptions {
    double symmetry_tol = 1e-10;
};

/// Full report: discrepancy, raw and normalized constants, C_eq moduli,
/// definiteness verdicts and symmetry class.
nlohmann::json run_case(const CompositeCase& c, const CaseOptions& opt = {});
nlohmann::json run_case(const nlohmann::json& config, const CaseOptions& opt = {});

/// Definiteness and symmetry only.
nlohmann::json run_check(const nlohmann::json& config, const CaseOptions& opt = {});

enum class SweepVariable { MuRatio, Nu1 };

struct SweepConfig {
    CaseKind kind = CaseKind::CylindricalInclusion;
    SweepVariable variable = SweepVariable::MuRatio;
    double lo = 0.0;
    double hi = 1.0;
    int points = 2;
    double nu1 = 0.0;
    double nu2 = 0.0;
    double mu1 = 1.0;
    double mu_ratio = 0.5;
    double f = 0.01;
    double rho = 1.0;
    int n = kCircleSides;
};

SweepConfig parse_sweep(const nlohmann::json& config);

struct SweepResult {
    std::string csv;                   // header plus every row computed before any failure
    std::optional<std::string> error;  // names the first failing grid point
    int rows = 0;
};

SweepResult run_sweep(const SweepConfig& s);

struct TableOptions {
    double tolerance = 5e-3;
};

/// Recomputes every reference table cell; "pass" is false when any cell of
/// the orthotropic table deviates by more than the tolerance.
nlohmann::json reproduce_tables(const TableOptions& opt = {});

/// Shape from {"shape": ..., size keys}. See README for the accepted forms.
RveShape parse_shape(const nlohmann::json& spec);

struct RveQuery {
    RveShape shape;
    std::optional<RveShape> reference;
    std::size_t mc_samples = 0;  // 0 skips the Monte Carlo cross-check
    std::uint64_t seed = 0;
};

nlohmann::json rve_query(const RveQuery& q);

// Numbers rendered with 12 significant digits.
std::string format_number(double v);

}  // namespace sgehom
