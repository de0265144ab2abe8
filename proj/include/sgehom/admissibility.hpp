#pragma once

#include <vector>

#include "sgehom/moduli.hpp"

namespace sgehom {

// Closed-form negative definiteness of a discrepancy tensor.
bool iso_nd_check(double K_t, double mu_t);
bool cubic_nd_check(double K_t, double mu_t, double xi_t);

// Individual inequalities: six in 3D (three shear planes, the e1 axial
// entry, the 2x2 and the 3x3 leading minors of the normal block), three in
// plane strain (shear, axial, 2x2 minor).
std::vector<bool> ortho_nd_conditions(const OrthoDiscrepancyConstants& d, Regime r);
bool ortho_nd_check(const OrthoDiscrepancyConstants& d, Regime r);

struct DefinitenessReport {
    bool definite = false;
    bool marginal = false;  // critical eigenvalue within 1e-12 * spectral radius of zero
    double min_eigenvalue = 0.0;
    double max_eigenvalue = 0.0;
};

inline constexpr double kSpectralMargin = 1e-12;

// Negative definiteness of C as a quadratic form on symmetric tensors.
DefinitenessReport spectral_nd_tensor4(const Tensor4& c);
// Positive definiteness of A as a quadratic form on strain gradients.
DefinitenessReport spectral_pd_tensor6(const Tensor6& a);

// Upper bound on mu2/mu1 below which the equivalent SGE energy of a dilute
// isotropic inclusion composite stays positive definite.
double pd_threshold(double nu1, double nu2, Regime r);

}  // namespace sgehom
