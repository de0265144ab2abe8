#include "sgehom/moduli.hpp"

#include <cmath>
#include <string>

namespace sgehom {

namespace {

constexpr double kron(int a, int b) { return a == b ? 1.0 : 0.0; }

// (e_a e_b + e_b e_a)_ij
constexpr double sym_dyad(int i, int j, int a, int b) { return kron(i, a) * kron(j, b) + kron(i, b) * kron(j, a); }

}  // namespace

std::string_view to_string(Regime r) { return r == Regime::PlaneStrain ? "plane_strain" : "three_d"; }

Regime regime_from_string(std::string_view s) {
    if (s == "plane_strain") return Regime::PlaneStrain;
    if (s == "three_d" || s == "3d") return Regime::ThreeD;
    throw ConfigError("unknown regime '" + std::string(s) + "' (expected plane_strain or three_d)");
}

double bulk_modulus(double lambda, double mu, Regime r) {
    return r == Regime::ThreeD ? lambda + 2.0 * mu / 3.0 : lambda + mu;
}

double bulk_modulus(const IsotropicModuli& m) { return bulk_modulus(m.lambda, m.mu, m.regime); }

bool IsotropicModuli::is_physical() const { return mu > 0.0 && bulk_modulus(*this) > 0.0; }

double poisson_ratio(const IsotropicModuli& m) {
    if (m.lambda + m.mu == 0.0) throw DomainError("Poisson ratio undefined for lambda + mu = 0");
    return m.lambda / (2.0 * (m.lambda + m.mu));
}

IsotropicModuli from_poisson(double nu, double mu, Regime r) {
    if (!(nu > -1.0 && nu < 0.5)) throw DomainError("nonphysical Poisson ratio " + std::to_string(nu));
    if (!(mu > 0.0)) throw DomainError("shear modulus must be positive");
    return {2.0 * mu * nu / (1.0 - 2.0 * nu), mu, r};
}

Tensor4 iso_tensor4(double lambda, double mu, int dim) {
    return Tensor4::from_canonical(dim, [=](int i, int j, int h, int k) {
        return lambda * kron(i, j) * kron(h, k) + mu * (kron(i, h) * kron(j, k) + kron(i, k) * kron(j, h));
    });
}

Tensor4 iso_tensor4(const IsotropicModuli& m) { return iso_tensor4(m.lambda, m.mu, dimension_of(m.regime)); }

Tensor4 cubic_tensor4(double lambda, double mu, double xi, int dim) {
    return Tensor4::from_canonical(dim, [=](int i, int j, int h, int k) {
        const double shear = sym_dyad(i, j, 1, 2) * sym_dyad(h, k, 1, 2) + sym_dyad(i, j, 0, 2) * sym_dyad(h, k, 0, 2) +
                             sym_dyad(i, j, 0, 1) * sym_dyad(h, k, 0, 1);
        return lambda * kron(i, j) * kron(h, k) + mu * (kron(i, h) * kron(j, k) + kron(i, k) * kron(j, h)) +
               xi * shear;
    });
}

Tensor4 ortho_tensor4(const OrthoDiscrepancyConstants& c, int dim) {
    return Tensor4::from_canonical(dim, [&c](int i, int j, int h, int k) {
        double v = c.lambda_t * kron(i, j) * kron(h, k) + c.mu_t * (kron(i, h) * kron(j, k) + kron(i, k) * kron(j, h));
        v += c.xi_I * sym_dyad(i, j, 1, 2) * sym_dyad(h, k, 1, 2);
        v += c.xi_II * sym_dyad(i, j, 0, 2) * sym_dyad(h, k, 0, 2);
        v += c.xi_III * sym_dyad(i, j, 0, 1) * sym_dyad(h, k, 0, 1);
        v += c.omega_I * kron(i, 0) * kron(j, 0) * kron(h, 0) * kron(k, 0);
        v += c.omega_II * kron(i, 2) * kron(j, 2) * kron(h, 2) * kron(k, 2);
        v += c.omega_III * (kron(i, j) * kron(h, 2) * kron(k, 2) + kron(h, k) * kron(i, 2) * kron(j, 2));
        v += c.omega_IV * (kron(i, 0) * kron(j, 0) * kron(h, 2) * kron(k, 2) +
                           kron(i, 2) * kron(j, 2) * kron(h, 0) * kron(k, 0));
        return v;
    });
}

Tensor4 ortho_tensor4(const OrthotropicModuli2D& m) {
    OrthoDiscrepancyConstants c;
    c.lambda_t = m.lambda;
    c.mu_t = m.mu;
    c.xi_III = m.xi;
    c.omega_I = m.omega;
    return ortho_tensor4(c, 2);
}

}  // namespace sgehom
