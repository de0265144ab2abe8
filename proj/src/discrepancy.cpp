#include "sgehom/discrepancy.hpp"

#include <cmath>
#include <string>

namespace sgehom {

namespace {

void require_regime(const IsotropicModuli& m, Regime r, const char* what) {
    if (m.regime != r)
        throw DomainError(std::string(what) + " requires the " + std::string(to_string(r)) + " regime");
}

void require_physical_matrix(const IsotropicModuli& m) {
    if (!m.is_physical()) throw DomainError("matrix phase must have mu > 0 and K > 0");
}

double checked_ratio(double num, double den, const char* what) {
    if (!(den > 0.0)) throw DomainError(std::string("nonphysical input: ") + what + " denominator <= 0");
    return num / den;
}

}  // namespace

IsoDiscrepancy IsoDiscrepancy::from_lame(double lambda_t, double mu_t, Regime r) {
    return {lambda_t, mu_t, bulk_modulus(lambda_t, mu_t, r), r};
}

IsoDiscrepancy IsoDiscrepancy::from_bulk_shear(double K_t, double mu_t, Regime r) {
    const double lambda_t = r == Regime::ThreeD ? K_t - 2.0 * mu_t / 3.0 : K_t - mu_t;
    return {lambda_t, mu_t, K_t, r};
}

PolygonConstants polygon_constants(int n) {
    switch (n) {
        case 3: return {3, 2.1065, 0.2295};
        case 5: return {5, 1.6198, 0.3233};
        case 6: return {6, 1.5688, 0.3288};
        case kCircleSides: return {kCircleSides, 1.5, 1.0 / 3.0};
        case 4:
            throw DomainError(
                "n = 4 gives a cubic (not isotropic) response: use square_hole_aligned, or square_hole_random "
                "for randomly oriented squares");
        default:
            throw DomainError("no tabulated polygon constants for n = " + std::to_string(n) +
                              " (available: 3, 5, 6, circle)");
    }
}

IsoDiscrepancy cylindrical_inclusion(const IsotropicModuli& matrix, const IsotropicModuli& inclusion) {
    require_regime(matrix, Regime::PlaneStrain, "cylindrical_inclusion");
    require_regime(inclusion, Regime::PlaneStrain, "cylindrical_inclusion");
    require_physical_matrix(matrix);
    const double K1 = bulk_modulus(matrix), mu1 = matrix.mu;
    const double K2 = bulk_modulus(inclusion), mu2 = inclusion.mu;
    const double K_t = checked_ratio((K2 - K1) * (K1 + mu1), K2 + mu1, "bulk");
    const double mu_t =
        checked_ratio(2.0 * mu1 * (mu2 - mu1) * (K1 + mu1), 2.0 * mu1 * mu2 + K1 * (mu1 + mu2), "shear");
    return IsoDiscrepancy::from_bulk_shear(K_t, mu_t, Regime::PlaneStrain);
}

IsoDiscrepancy spherical_inclusion(const IsotropicModuli& matrix, const IsotropicModuli& inclusion) {
    require_regime(matrix, Regime::ThreeD, "spherical_inclusion");
    require_regime(inclusion, Regime::ThreeD, "spherical_inclusion");
    require_physical_matrix(matrix);
    const double K1 = bulk_modulus(matrix), mu1 = matrix.mu;
    const double K2 = bulk_modulus(inclusion), mu2 = inclusion.mu;
    const double s1 = 3.0 * K1 + 4.0 * mu1;
    const double K_t = checked_ratio(s1 * (K2 - K1), 3.0 * K2 + 4.0 * mu1, "bulk");
    const double mu_t = checked_ratio(5.0 * mu1 * (mu2 - mu1) * s1,
                                      mu1 * (3.0 * K1 + 4.0 * mu2) + 2.0 * s1 * (mu2 + mu1), "shear");
    return IsoDiscrepancy::from_bulk_shear(K_t, mu_t, Regime::ThreeD);
}

IsoDiscrepancy polygonal_hole(const IsotropicModuli& matrix, const PolygonConstants& pc) {
    require_regime(matrix, Regime::PlaneStrain, "polygonal_hole");
    require_physical_matrix(matrix);
    const double K1 = bulk_modulus(matrix), mu1 = matrix.mu;
    const double K_t = -pc.A * (1.0 - pc.B) * (K1 + mu1) / mu1 * K1;
    const double mu_t = -pc.A * (1.0 + pc.B) * (K1 + mu1) / K1 * mu1;
    return IsoDiscrepancy::from_bulk_shear(K_t, mu_t, Regime::PlaneStrain);
}

IsoDiscrepancy polygonal_hole(const IsotropicModuli& matrix, int n) {
    return polygonal_hole(matrix, polygon_constants(n));
}

CubicDiscrepancy square_hole_aligned(const IsotropicModuli& matrix) {
    require_regime(matrix, Regime::PlaneStrain, "square_hole_aligned");
    require_physical_matrix(matrix);
    const double K1 = bulk_modulus(matrix), mu1 = matrix.mu;
    const double g = (K1 + mu1) / K1 * mu1;
    CubicDiscrepancy c;
    c.lambda_t = -(kSquareHoleBulkCoeff * K1 * K1 - kSquareHoleShearCoeff * mu1 * mu1) * (K1 + mu1) / (K1 * mu1);
    c.mu_t = -kSquareHoleShearCoeff * g;
    c.xi_t = -kSquareHoleCubicCoeff * g;
    c.regime = Regime::PlaneStrain;
    return c;
}

IsoDiscrepancy square_hole_random(const IsotropicModuli& matrix) {
    return polygonal_hole(matrix, kRandomSquareConstants);
}

OrthoHoleResult ortho_circular_hole(const OrthotropicModuli2D& matrix) {
    using R = long double;
    const R l = matrix.lambda, m = matrix.mu, x = matrix.xi;
    const R w = R(matrix.omega) / 2;
    const R c22 = l + 2 * m;
    const R scale = (std::fabs(l) + std::fabs(m) + std::fabs(x) + std::fabs(w)) *
                    (std::fabs(l) + std::fabs(m) + std::fabs(x) + std::fabs(w));
    bool near_singular = false;
    auto guard = [&](R den, const char* what) {
        if (den == 0 || !std::isfinite(static_cast<double>(den)))
            throw DomainError(std::string("degenerate orthotropy: ") + what + " vanishes");
        if (std::fabs(den) < 1e-9L * scale) near_singular = true;
    };

    guard(c22 * (m + x), "(lambda + 2 mu)(mu + xi)");
    const R Gamma = (2 * m * (m + w) + l * (m - x + w)) / (c22 * (m + x));
    const R Delta = ((-2 * x * (c22 + x) + c22 * w) * (2 * m * (m + w) + l * (2 * m + w))) /
                    (c22 * c22 * (m + x) * (m + x));
    const R rad_gamma = Gamma * Gamma - Delta;
    if (Delta < 0 || rad_gamma < 0)
        throw DomainError("orthotropy yields complex auxiliary constants");
    const R sqrt_delta = std::sqrt(Delta);
    if (Gamma - sqrt_delta < 0) throw DomainError("orthotropy yields complex auxiliary constants");
    const R g = std::sqrt(rad_gamma);
    const R d = std::sqrt(Gamma + sqrt_delta) + std::sqrt(Gamma - sqrt_delta);

    const R P = (g - 1) * l + 2 * g * m;
    const R Q = l + g * l + 2 * g * m;
    guard(P, "(gamma - 1) lambda + 2 gamma mu");
    guard(Q, "(1 + gamma) lambda + 2 gamma mu");
    const R S = (-2 + 2 * g - d * d) * l + 4 * g * m - 2 * d * d * m;
    guard(S * S, "((2 gamma - 2 - delta^2) lambda + (4 gamma - 2 delta^2) mu)^2");
    const R PQ = P * Q;

    const R lambda_t =
        g * c22 * (((g - 1) * (g - 1) - (1 + g) * d) * l * l + 2 * (2 * (g - 1) * g - (1 + g) * d) * l * m +
                   4 * g * g * m * m) /
        PQ;
    const R mu_t = -c22 *
                   ((g * g - 1) * (g - 1 - d) * l * l + 2 * (g - 1) * g * (2 + 2 * g - d) * l * m +
                    4 * g * (g + g * g + d) * m * m) /
                   (2 * PQ);
    const R xi_t = -mu_t - d * (1 + g + d) * c22 * PQ / (S * S);
    const R omega_half = -mu_t - g * c22 *
                                     ((g * g - 1) * (g - 1 + g * d) * l * l +
                                      2 * (g - 1) * (d + 2 * g * (1 + g) * (1 + d)) * l * m +
                                      4 * g * g * (1 + g + g * d) * m * m) /
                                     (2 * PQ);

    OrthoHoleResult r;
    r.disc.lambda_t = static_cast<double>(lambda_t);
    r.disc.mu_t = static_cast<double>(mu_t);
    r.disc.xi_III = static_cast<double>(xi_t);
    r.disc.omega_I = static_cast<double>(2 * omega_half);
    r.aux = {static_cast<double>(Gamma), static_cast<double>(Delta), static_cast<double>(g),
             static_cast<double>(d)};
    r.near_singular = near_singular;
    return r;
}

Tensor4 effective_local_tensor(const Tensor4& matrix_c, const Tensor4& disc_c, double f) {
    if (!(f >= 0.0 && f < 1.0)) throw DomainError("volume fraction must lie in [0, 1)");
    return matrix_c + f * disc_c;
}

}  // namespace sgehom
