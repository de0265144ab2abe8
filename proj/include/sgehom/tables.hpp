#pragma once

#include <array>
#include <span>
#include <string_view>

#include "sgehom/discrepancy.hpp"

namespace sgehom::tables {

struct PolygonRow {
    int n;  // kCircleSides for the circle
    double A;
    double B;
};

inline constexpr std::array<PolygonRow, 4> kPolygonConstants{{
    {3, 2.1065, 0.2295},
    {5, 1.6198, 0.3233},
    {6, 1.5688, 0.3288},
    {kCircleSides, 1.5, 1.0 / 3.0},
}};

struct OrthoInputRow {
    std::string_view material;
    int orientation;  // 1, 2, 3
    OrthotropicModuli2D moduli;
};

// Reference normalized constants, columns as tabulated:
// a2, a4, a9 / 2, a6, each over f rho^2 mu1.
struct OrthoReferenceRow {
    std::string_view material;
    int orientation;
    std::array<double, 4> values;
};

std::span<const OrthoInputRow> ortho_inputs();
std::span<const OrthoReferenceRow> ortho_reference();

/// Reference row holding the result computed from input orientation k
/// (orientations 1 and 3 are exchanged between the two tables).
int reference_orientation_for_input(int orientation);

/// Maps normalized library constants (a2, a4, a6, a9) into the reference
/// column layout: (a2, a4, a9 / 2, a6).
std::array<double, 4> to_reference_layout(double a2, double a4, double a6, double a9);

}  // namespace sgehom::tables
