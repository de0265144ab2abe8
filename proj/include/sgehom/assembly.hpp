#pragma once

#include <array>
#include <string_view>

#include "sgehom/discrepancy.hpp"

namespace sgehom {

enum class SymmetryClass { Isotropic, Cubic, Orthotropic, Anisotropic };

std::string_view to_string(SymmetryClass s);

/// Scalars a1..a12 of the isotropic / cubic / orthotropic sixth-order
/// representations. `dilute` marks constants produced from a discrepancy
/// tensor, for which a1 = a3 = 0 and a4 = a5 must hold.
struct HigherOrderConstants {
    std::array<double, 12> a{};
    SymmetryClass symmetry = SymmetryClass::Isotropic;
    int dim = 3;
    bool dilute = true;

    // 1-based, matching the a_k naming.
    double& operator[](int k) { return a.at(static_cast<std::size_t>(k - 1)); }
    double operator[](int k) const { return a.at(static_cast<std::size_t>(k - 1)); }
    HigherOrderConstants normalized(double scale) const;
};

/// a2 = -f rho^2 lambda~ / 2, a4 = a5 = -f rho^2 mu~ / 2, a1 = a3 = 0.
HigherOrderConstants iso_constants(double lambda_t, double mu_t, double f, double rho, int dim);
/// a6 = -f rho^2 xi~ / 2.
double cubic_a6(double xi_t, double f, double rho);
HigherOrderConstants cubic_constants(const CubicDiscrepancy& d, double f, double rho);
/// a6..a12 from xi~III, xi~II, xi~I, omega~I..omega~IV.
HigherOrderConstants ortho_constants(const OrthoDiscrepancyConstants& d, double f, double rho, int dim);

/// A_ijhlmn = -f rho^2 / 4 (C~_ihln d_jm + C~_ihmn d_jl + C~_jhln d_im + C~_jhmn d_il).
Tensor6 assemble_generic(const Tensor4& disc, double f, double rho);

/// Explicit index expansion of the representation selected by c.symmetry.
/// Throws DomainError when constants contradict the declared class.
Tensor6 assemble_from_constants(const HigherOrderConstants& c);

/// Recovers C~ from A by the nine-term index combination scaled by
/// -1 / (f rho^2), then re-assembles; a relative residual above 1e-9 throws
/// DomainError("tensor not of dilute-SGE form").
Tensor4 invert_to_discrepancy(const Tensor6& a, double f, double rho);

/// Highest symmetry among isotropic > cubic > orthotropic (axes aligned with
/// the coordinate frame) that the tensor passes at relative tolerance tol.
SymmetryClass detect_symmetry(const Tensor6& a, double tol = 1e-10);
SymmetryClass detect_symmetry(const Tensor4& c, double tol = 1e-10);

}  // namespace sgehom
