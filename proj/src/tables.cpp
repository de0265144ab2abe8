#include "sgehom/tables.hpp"

namespace sgehom::tables {

namespace {

constexpr std::array<OrthoInputRow, 15> kInputs{{
    {"olivine", 1, {66.000, 47.000, -17.000, 32.000}},
    {"olivine", 2, {60.000, 106.000, -75.000, -80.000}},
    {"olivine", 3, {56.000, 52.000, -27.500, 112.000}},
    {"pine", 1, {0.740, 8.180, -7.590, -15.860}},
    {"pine", 2, {0.760, 0.515, -0.476, -0.550}},
    {"pine", 3, {0.940, 8.080, -7.625, -15.310}},
    {"olivinite", 1, {93.000, 58.500, -21.85, 22.000}},
    {"olivinite", 2, {92.000, 53.500, -18.05, 33.000}},
    {"olivinite", 3, {82.000, 64.000, -29.7, -11.000}},
    {"marble", 1, {51.000, 29.500, -14.65, 9.000}},
    {"marble", 2, {52.000, 26.000, -10.65, 15.000}},
    {"marble", 3, {47.000, 31.500, -15.2, -6.000}},
    {"canine_femora", 1, {9.730, 6.235, -2.900, -3.200}},
    {"canine_femora", 2, {11.900, 8.900, -6.065, -10.700}},
    {"canine_femora", 3, {11.900, 5.150, -2.815, 7.500}},
}};

constexpr std::array<OrthoReferenceRow, 15> kReference{{
    {"olivine", 1, {2.426, 1.661, 3.077, -1.198}},
    {"olivine", 2, {1.133, 2.105, -1.014, -1.804}},
    {"olivine", 3, {3.254, 1.497, 0.858, -0.780}},
    {"pine", 1, {0.269, 3.789, -3.754, -3.737}},
    {"pine", 2, {10.297, 3.551, -3.268, -3.497}},
    {"pine", 3, {0.142, 3.478, -3.455, -3.399}},
    {"olivinite", 1, {3.119, 1.644, -0.220, -1.045}},
    {"olivinite", 2, {4.398, 1.414, 0.804, -0.675}},
    {"olivinite", 3, {4.011, 1.481, 0.487, -0.782}},
    {"marble", 1, {4.023, 1.629, -0.257, -1.068}},
    {"marble", 2, {5.866, 1.389, 0.823, -0.768}},
    {"marble", 3, {5.080, 1.532, 0.440, -1.015}},
    {"canine_femora", 1, {8.279, 1.219, 2.465, -0.801}},
    {"canine_femora", 2, {4.401, 2.110, -1.875, -1.788}},
    {"canine_femora", 3, {4.273, 1.660, -0.690, -1.063}},
}};

}  // namespace

std::span<const OrthoInputRow> ortho_inputs() { return kInputs; }
std::span<const OrthoReferenceRow> ortho_reference() { return kReference; }

int reference_orientation_for_input(int orientation) { return orientation == 2 ? 2 : 4 - orientation; }

std::array<double, 4> to_reference_layout(double a2, double a4, double a6, double a9) {
    return {a2, a4, a9 / 2.0, a6};
}

}  // namespace sgehom::tables
