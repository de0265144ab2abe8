#pragma once

#include <string_view>

#include "sgehom/tensor.hpp"

namespace sgehom {

enum class Regime { PlaneStrain, ThreeD };

constexpr int dimension_of(Regime r) { return r == Regime::PlaneStrain ? 2 : 3; }
std::string_view to_string(Regime r);
Regime regime_from_string(std::string_view s);

/// Isotropic phase given by its Lame constants (GPa). The void phase is
/// lambda = mu = 0.
struct IsotropicModuli {
    double lambda = 0.0;
    double mu = 0.0;
    Regime regime = Regime::ThreeD;

    static IsotropicModuli void_phase(Regime r) { return {0.0, 0.0, r}; }
    bool is_void() const { return lambda == 0.0 && mu == 0.0; }
    // mu > 0 and K > 0.
    bool is_physical() const;
};

/// K = lambda + 2 mu / 3 in 3D, lambda + mu in plane strain.
double bulk_modulus(const IsotropicModuli& m);
double bulk_modulus(double lambda, double mu, Regime r);

/// nu = lambda / (2 (lambda + mu)).
double poisson_ratio(const IsotropicModuli& m);

/// lambda = 2 mu nu / (1 - 2 nu). Throws DomainError("nonphysical Poisson
/// ratio") unless -1 < nu < 1/2, and when mu <= 0.
IsotropicModuli from_poisson(double nu, double mu, Regime r);

/// In-plane orthotropic constants: C_1111 = lambda + 2 mu + omega,
/// C_2222 = lambda + 2 mu, C_1122 = lambda, C_1212 = mu + xi.
struct OrthotropicModuli2D {
    double lambda = 0.0;
    double mu = 0.0;
    double xi = 0.0;
    double omega = 0.0;
};

/// The nine constants of an orthotropic (discrepancy) tensor with axes
/// along x1, x2, x3. xi_I, xi_II, xi_III act on the (23), (13), (12) shear
/// dyads; omega_I on e1^4, omega_II on e3^4, omega_III on the
/// I (x) e3e3 + e3e3 (x) I pair, omega_IV on e1e1 (x) e3e3 + e3e3 (x) e1e1.
/// The x1-x2 plane only sees {lambda, mu, xi_III, omega_I}.
struct OrthoDiscrepancyConstants {
    double lambda_t = 0.0;
    double mu_t = 0.0;
    double xi_I = 0.0;
    double xi_II = 0.0;
    double xi_III = 0.0;
    double omega_I = 0.0;
    double omega_II = 0.0;
    double omega_III = 0.0;
    double omega_IV = 0.0;

    friend bool operator==(const OrthoDiscrepancyConstants&, const OrthoDiscrepancyConstants&) = default;
};

Tensor4 iso_tensor4(double lambda, double mu, int dim);
Tensor4 iso_tensor4(const IsotropicModuli& m);
Tensor4 cubic_tensor4(double lambda, double mu, double xi, int dim);
Tensor4 ortho_tensor4(const OrthoDiscrepancyConstants& c, int dim);
// Plane-strain stiffness of an orthotropic matrix.
Tensor4 ortho_tensor4(const OrthotropicModuli2D& m);

}  // namespace sgehom
