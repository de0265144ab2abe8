#pragma once

// RVE shapes and their radius of inertia.
//
// Convention: rho^2 = 2 J / A in 2D and rho^2 = (5/3) I0 / V in 3D, where J
// and I0 are centroidal polar second moments. A disk or ball of radius R then
// has rho = R. Ratios of rho^2 at equal measure do not depend on it.

#include <array>
#include <cstddef>
#include <cstdint>
#include <variant>
#include <vector>

namespace sgehom {

struct Circle {
    double radius;
};
struct RegularPolygon {
    int n;
    double side;
};
// Counterclockwise, strictly convex.
struct ConvexPolygon {
    std::vector<std::array<double, 2>> vertices;
};
struct Sphere {
    double radius;
};
struct Cube {
    double side;
};
// Vertices are the permutations of (0, +-1, +-2) * edge / sqrt(2).
struct TruncatedOctahedron {
    double edge;
};

using RveShape = std::variant<Circle, RegularPolygon, ConvexPolygon, Sphere, Cube, TruncatedOctahedron>;

enum class RhoConvention { BallMatching, Raw };

inline constexpr double kRho2Factor2D = 2.0;
inline constexpr double kRho2Factor3D = 5.0 / 3.0;

int shape_dimension(const RveShape& s);
// Area (2D) or volume (3D). DomainError on degenerate geometry.
double measure(const RveShape& s);
// J / A or I0 / V about the centroid.
double specific_second_moment(const RveShape& s);
std::array<double, 3> centroid(const RveShape& s);
double radius_of_inertia(const RveShape& s, RhoConvention conv = RhoConvention::BallMatching);

RveShape scaled(const RveShape& s, double k);
ConvexPolygon translated(const ConvexPolygon& p, double dx, double dy);

struct McEstimate {
    double estimate;   // J/A or I0/V
    double std_error;
    std::size_t proposals;
};

/// Rejection sampling in the bounding box until `samples` points are accepted
/// (samples >= 10^4). Deterministic for a fixed seed.
McEstimate mc_second_moment(const RveShape& s, std::size_t samples, std::uint64_t seed);

/// rho^2(M) / rho^2(N) after rescaling N to the measure of M.
double rve_ratio(const RveShape& m, const RveShape& n, RhoConvention conv = RhoConvention::BallMatching);

}  // namespace sgehom
