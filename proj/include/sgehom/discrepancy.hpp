#pragma once

// First-order (dilute) discrepancy tensors C~ for the composite cases, with
// C_eq = C_matrix + f C~.

#include <limits>

#include "sgehom/moduli.hpp"

namespace sgehom {

/// Isotropic discrepancy; K_t always satisfies K_t = bulk_modulus(lambda_t, mu_t, regime).
struct IsoDiscrepancy {
    double lambda_t = 0.0;
    double mu_t = 0.0;
    double K_t = 0.0;
    Regime regime = Regime::PlaneStrain;

    static IsoDiscrepancy from_lame(double lambda_t, double mu_t, Regime r);
    static IsoDiscrepancy from_bulk_shear(double K_t, double mu_t, Regime r);
    Tensor4 tensor() const { return iso_tensor4(lambda_t, mu_t, dimension_of(regime)); }
};

struct CubicDiscrepancy {
    double lambda_t = 0.0;
    double mu_t = 0.0;
    double xi_t = 0.0;
    Regime regime = Regime::PlaneStrain;

    double K_t() const { return bulk_modulus(lambda_t, mu_t, regime); }
    Tensor4 tensor() const { return cubic_tensor4(lambda_t, mu_t, xi_t, dimension_of(regime)); }
};

// Sides count standing for the circular limit n -> infinity.
inline constexpr int kCircleSides = std::numeric_limits<int>::max();

struct PolygonConstants {
    int n;
    double A;
    double B;
};

/// Tabulated A(n), B(n) for n in {3, 5, 6} and the circle. n = 4 throws a
/// DomainError pointing at the square-hole cases; any other n is unsupported.
PolygonConstants polygon_constants(int n);

// Randomly oriented square holes.
inline constexpr PolygonConstants kRandomSquareConstants{4, 1.738, 0.306};

// Aligned square holes: lambda~ = -(c_K K^2 - c_mu mu^2)(K+mu)/(K mu),
// mu~ = -c_mu (K+mu) mu / K, xi~ = -c_xi (K+mu) mu / K.
inline constexpr double kSquareHoleBulkCoeff = 1.198;
inline constexpr double kSquareHoleShearCoeff = 1.864;
inline constexpr double kSquareHoleCubicCoeff = 0.796;

/// Dilute circular cylinders (plane strain).
IsoDiscrepancy cylindrical_inclusion(const IsotropicModuli& matrix, const IsotropicModuli& inclusion);

/// Dilute spheres (3D).
IsoDiscrepancy spherical_inclusion(const IsotropicModuli& matrix, const IsotropicModuli& inclusion);

/// Regular n-gonal holes, plane strain:
/// K~ = -A (1 - B)(K+mu) K / mu,  mu~ = -A (1 + B)(K+mu) mu / K.
IsoDiscrepancy polygonal_hole(const IsotropicModuli& matrix, int n);
IsoDiscrepancy polygonal_hole(const IsotropicModuli& matrix, const PolygonConstants& pc);

CubicDiscrepancy square_hole_aligned(const IsotropicModuli& matrix);
IsoDiscrepancy square_hole_random(const IsotropicModuli& matrix);

/// Auxiliary constants of the orthotropic circular-hole solution. gamma and
/// delta are the product and the sum of the two characteristic roots.
struct OrthoAux {
    double Gamma = 0.0;
    double Delta = 0.0;
    double gamma = 0.0;
    double delta = 0.0;
};

struct OrthoHoleResult {
    OrthoDiscrepancyConstants disc;  // only lambda_t, mu_t, xi_III, omega_I populated
    OrthoAux aux;
    bool near_singular = false;  // some |denominator| < 1e-9 * numerator scale

    Tensor4 tensor() const { return ortho_tensor4(disc, 2); }
};

/// Dilute circular holes in an orthotropic matrix (plane strain, hole
/// centres aligned with the orthotropy axes).
///
/// The closed form is written for a matrix whose e1^4 term carries 2*omega;
/// the matrix omega is halved on entry and the discrepancy omega doubled on
/// exit so both sides follow OrthotropicModuli2D / OrthoDiscrepancyConstants.
/// Evaluated in long double.
///
/// Errors: DomainError "orthotropy yields complex auxiliary constants" when a
/// radicand is negative, "degenerate orthotropy" when a denominator vanishes.
OrthoHoleResult ortho_circular_hole(const OrthotropicModuli2D& matrix);

/// C_eq = C_matrix + f C~, 0 <= f < 1.
Tensor4 effective_local_tensor(const Tensor4& matrix_c, const Tensor4& disc_c, double f);

}  // namespace sgehom
