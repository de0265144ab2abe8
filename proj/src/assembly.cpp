#include "sgehom/assembly.hpp"

#include <cmath>
#include <numbers>
#include <string>
#include <vector>

namespace sgehom {

namespace {

constexpr double d(int a, int b) { return a == b ? 1.0 : 0.0; }

// (e_p e_q + e_q e_p) evaluated at (a, b).
constexpr double pair(int a, int b, int p, int q) { return d(a, p) * d(b, q) + d(a, q) * d(b, p); }

double iso_term(const HigherOrderConstants& c, int i, int j, int h, int l, int m, int n) {
    const double t1 = d(i, j) * (d(h, l) * d(m, n) + d(h, m) * d(l, n)) + d(l, m) * (d(i, n) * d(j, h) + d(i, h) * d(j, n));
    const double t2 = d(i, h) * (d(j, l) * d(m, n) + d(j, m) * d(l, n)) + d(j, h) * (d(i, l) * d(m, n) + d(i, m) * d(l, n));
    const double t3 = d(i, j) * d(h, n) * d(l, m);
    const double t4 = (d(i, l) * d(j, m) + d(i, m) * d(j, l)) * d(h, n);
    const double t5 = d(i, n) * (d(j, l) * d(h, m) + d(j, m) * d(h, l)) + d(j, n) * (d(i, l) * d(h, m) + d(i, m) * d(h, l));
    return c[1] / 2 * t1 + c[2] / 2 * t2 + 2 * c[3] * t3 + c[4] * t4 + c[5] / 2 * t5;
}

// Shear-plane (p, q) block shared by a6, a7, a8.
double shear_term(int i, int j, int h, int l, int m, int n, int p, int q) {
    return pair(i, h, p, q) * (pair(l, n, p, q) * d(j, m) + pair(m, n, p, q) * d(j, l)) +
           pair(j, h, p, q) * (pair(l, n, p, q) * d(i, m) + pair(m, n, p, q) * d(i, l));
}

// Single-axis block shared by a9, a10.
double axis_term(int i, int j, int h, int l, int m, int n, int p) {
    return (d(i, p) * (d(l, p) * d(j, m) + d(m, p) * d(j, l)) + d(j, p) * (d(l, p) * d(i, m) + d(m, p) * d(i, l))) *
           d(h, p) * d(n, p);
}

double a11_term(int i, int j, int h, int l, int m, int n) {
    constexpr int z = 2;
    return d(h, z) * (d(l, n) * (d(j, m) * d(i, z) + d(i, m) * d(j, z)) + d(m, n) * (d(j, l) * d(i, z) + d(i, l) * d(j, z))) +
           d(n, z) * (d(i, h) * (d(j, m) * d(l, z) + d(j, l) * d(m, z)) + d(j, h) * (d(i, m) * d(l, z) + d(i, l) * d(m, z)));
}

double a12_term(int i, int j, int h, int l, int m, int n) {
    constexpr int x = 0, z = 2;
    return d(h, x) * d(n, z) *
               (d(i, x) * (d(j, m) * d(l, z) + d(j, l) * d(m, z)) + d(j, x) * (d(i, m) * d(l, z) + d(i, l) * d(m, z))) +
           d(h, z) * d(n, x) *
               (d(i, z) * (d(j, m) * d(l, x) + d(j, l) * d(m, x)) + d(j, z) * (d(i, m) * d(l, x) + d(i, l) * d(m, x)));
}

void require_zero(const HigherOrderConstants& c, int from, int to, const char* cls) {
    for (int k = from; k <= to; ++k)
        if (c[k] != 0.0)
            throw DomainError("inconsistent constants: a" + std::to_string(k) + " must vanish for the " + cls +
                              " representation");
}

std::vector<OrthogonalMap> reflections(int dim) {
    std::vector<OrthogonalMap> out;
    for (int k = 0; k < dim; ++k) out.push_back(OrthogonalMap::reflection(dim, k));
    return out;
}

std::vector<OrthogonalMap> quarter_turns(int dim) {
    constexpr double q = std::numbers::pi / 2;
    if (dim == 2) return {OrthogonalMap::in_plane_rotation(2, q)};
    return {OrthogonalMap::axis_rotation({1, 0, 0}, q), OrthogonalMap::axis_rotation({0, 1, 0}, q),
            OrthogonalMap::axis_rotation({0, 0, 1}, q)};
}

std::vector<OrthogonalMap> generic_rotations(int dim) {
    if (dim == 2) return {OrthogonalMap::in_plane_rotation(2, 0.3711), OrthogonalMap::in_plane_rotation(2, 1.2345)};
    return {OrthogonalMap::axis_rotation({1, 2, 3}, 0.7391), OrthogonalMap::axis_rotation({-2, 0.5, 1}, 1.9173),
            OrthogonalMap::random(3, 20240917)};
}

template <class T>
SymmetryClass detect_impl(const T& t, double tol) {
    auto all = [&](const std::vector<OrthogonalMap>& qs) {
        for (const auto& q : qs)
            if (!is_invariant_under(t, q, tol)) return false;
        return true;
    };
    const int dim = t.dim();
    if (!all(reflections(dim))) return SymmetryClass::Anisotropic;
    if (!all(quarter_turns(dim))) return SymmetryClass::Orthotropic;
    if (!all(generic_rotations(dim))) return SymmetryClass::Cubic;
    return SymmetryClass::Isotropic;
}

}  // namespace

std::string_view to_string(SymmetryClass s) {
    switch (s) {
        case SymmetryClass::Isotropic: return "isotropic";
        case SymmetryClass::Cubic: return "cubic";
        case SymmetryClass::Orthotropic: return "orthotropic";
        case SymmetryClass::Anisotropic: return "anisotropic";
    }
    return "anisotropic";
}

HigherOrderConstants HigherOrderConstants::normalized(double scale) const {
    if (scale == 0.0) throw DomainError("normalization scale must be nonzero");
    HigherOrderConstants out = *this;
    for (double& v : out.a) v /= scale;
    return out;
}

HigherOrderConstants iso_constants(double lambda_t, double mu_t, double f, double rho, int dim) {
    require_dim(dim);
    HigherOrderConstants c;
    c.dim = dim;
    c.symmetry = SymmetryClass::Isotropic;
    const double s = -f * rho * rho / 2;
    c[2] = s * lambda_t;
    c[4] = s * mu_t;
    c[5] = s * mu_t;
    return c;
}

double cubic_a6(double xi_t, double f, double rho) { return -f * rho * rho / 2 * xi_t; }

HigherOrderConstants cubic_constants(const CubicDiscrepancy& dsc, double f, double rho) {
    HigherOrderConstants c = iso_constants(dsc.lambda_t, dsc.mu_t, f, rho, dimension_of(dsc.regime));
    c.symmetry = SymmetryClass::Cubic;
    c[6] = cubic_a6(dsc.xi_t, f, rho);
    return c;
}

HigherOrderConstants ortho_constants(const OrthoDiscrepancyConstants& dsc, double f, double rho, int dim) {
    HigherOrderConstants c = iso_constants(dsc.lambda_t, dsc.mu_t, f, rho, dim);
    c.symmetry = SymmetryClass::Orthotropic;
    const double s = -f * rho * rho / 2;
    c[6] = s * dsc.xi_III;
    c[7] = s * dsc.xi_II;
    c[8] = s * dsc.xi_I;
    c[9] = s * dsc.omega_I;
    c[10] = s * dsc.omega_II;
    c[11] = s * dsc.omega_III;
    c[12] = s * dsc.omega_IV;
    return c;
}

Tensor6 assemble_generic(const Tensor4& disc, double f, double rho) {
    const double s = -f * rho * rho / 4;
    return Tensor6::from_canonical(disc.dim(), [&](int i, int j, int h, int l, int m, int n) {
        return s * (disc(i, h, l, n) * d(j, m) + disc(i, h, m, n) * d(j, l) + disc(j, h, l, n) * d(i, m) +
                    disc(j, h, m, n) * d(i, l));
    });
}

Tensor6 assemble_from_constants(const HigherOrderConstants& c) {
    require_dim(c.dim);
    if (c.dilute) {
        if (c[1] != 0.0 || c[3] != 0.0) throw DomainError("inconsistent constants: dilute assembly requires a1 = a3 = 0");
        if (c[4] != c[5]) throw DomainError("inconsistent constants: dilute assembly requires a4 = a5");
    }
    switch (c.symmetry) {
        case SymmetryClass::Isotropic: require_zero(c, 6, 12, "isotropic"); break;
        case SymmetryClass::Cubic: require_zero(c, 7, 12, "cubic"); break;
        case SymmetryClass::Orthotropic: break;
        case SymmetryClass::Anisotropic:
            throw DomainError("no constants representation for an anisotropic sixth-order tensor");
    }
    const bool cubic = c.symmetry == SymmetryClass::Cubic;
    return Tensor6::from_canonical(c.dim, [&](int i, int j, int h, int l, int m, int n) {
        double v = iso_term(c, i, j, h, l, m, n);
        if (c.symmetry == SymmetryClass::Isotropic) return v;
        const double s12 = shear_term(i, j, h, l, m, n, 0, 1);
        const double s13 = shear_term(i, j, h, l, m, n, 0, 2);
        const double s23 = shear_term(i, j, h, l, m, n, 1, 2);
        if (cubic) return v + c[6] / 2 * (s12 + s13 + s23);
        v += c[6] / 2 * s12 + c[7] / 2 * s13 + c[8] / 2 * s23;
        v += c[9] / 2 * axis_term(i, j, h, l, m, n, 0) + c[10] / 2 * axis_term(i, j, h, l, m, n, 2);
        v += c[11] / 2 * a11_term(i, j, h, l, m, n) + c[12] / 2 * a12_term(i, j, h, l, m, n);
        return v;
    });
}

Tensor4 invert_to_discrepancy(const Tensor6& a, double f, double rho) {
    if (!(f > 0.0)) throw DomainError("volume fraction must be positive");
    if (!(rho > 0.0)) throw DomainError("radius of inertia must be positive");
    const int dim = a.dim();
    const double s = -1.0 / (f * rho * rho);
    auto bracket = [&](int i, int j, int h, int l, int m, int n) {
        return a(i, j, h, l, m, n) + a(j, h, i, m, n, l) + a(h, i, j, n, l, m) - a(i, j, h, n, l, m) -
               a(h, i, j, l, m, n) + a(i, j, h, m, n, l) + a(j, h, i, l, m, n) - a(j, h, i, n, l, m) -
               a(h, i, j, m, n, l);
    };
    Tensor4 c = Tensor4::from_canonical(dim, [&](int i, int h, int l, int n) {
        double sum = 0.0;
        for (int j = 0; j < dim; ++j) sum += bracket(i, j, h, l, j, n);
        return s * sum / dim;
    });
    const double resid = max_abs_diff(assemble_generic(c, f, rho), a);
    if (resid > 1e-9 * a.max_abs()) throw DomainError("tensor not of dilute-SGE form");
    return c;
}

SymmetryClass detect_symmetry(const Tensor6& a, double tol) { return detect_impl(a, tol); }
SymmetryClass detect_symmetry(const Tensor4& c, double tol) { return detect_impl(c, tol); }

}  // namespace sgehom
