#pragma once

// Dense fourth- and sixth-order tensors in dimension 2 or 3 with the index
// symmetries of elasticity (Tensor4) and of strain-gradient elasticity
// (Tensor6), orthogonal transformations, and flattening onto
// orthonormal bases so that quadratic-form definiteness becomes matrix
// definiteness.
//
// Storage is always the 3-dimensional layout; entries with an index >= dim()
// are zero and never read. Values are only ever written through a canonical
// representative of their symmetry orbit, so every symmetry holds bit-exactly.

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "sgehom/errors.hpp"

namespace sgehom {

void require_dim(int dim);

class Tensor4 {
public:
    static constexpr int kSize = 81;

    explicit Tensor4(int dim = 3);

    // Builds C_ijhk = f(i, j, h, k), calling f only on the canonical
    // representative (i <= j, h <= k, (i,j) <= (h,k)) of each orbit.
    template <class F>
    static Tensor4 from_canonical(int dim, F&& f);

    // Dense row-major dim^4 input; minor and major symmetry must hold
    // exactly, otherwise SymmetryError.
    static Tensor4 from_dense(int dim, std::span<const double> values);

    int dim() const { return dim_; }
    double operator()(int i, int j, int h, int k) const { return c_[offset(i, j, h, k)]; }
    double max_abs() const;
    std::vector<double> to_dense() const;

    Tensor4& operator+=(const Tensor4& other);
    Tensor4& operator-=(const Tensor4& other);
    Tensor4& operator*=(double s);
    friend Tensor4 operator+(Tensor4 a, const Tensor4& b) { return a += b; }
    friend Tensor4 operator-(Tensor4 a, const Tensor4& b) { return a -= b; }
    friend Tensor4 operator*(double s, Tensor4 a) { return a *= s; }
    friend Tensor4 operator*(Tensor4 a, double s) { return a *= s; }
    friend bool operator==(const Tensor4&, const Tensor4&) = default;

    static constexpr int offset(int i, int j, int h, int k) { return ((i * 3 + j) * 3 + h) * 3 + k; }
    static std::array<int, 4> canonical(int i, int j, int h, int k);

private:
    int dim_;
    std::array<double, kSize> c_{};
};

class Tensor6 {
public:
    static constexpr int kSize = 729;

    explicit Tensor6(int dim = 3);

    // Builds A_ijhlmn = f(i, j, h, l, m, n) from canonical representatives
    // under i<->j, l<->m and (ijh)<->(lmn).
    template <class F>
    static Tensor6 from_canonical(int dim, F&& f);

    static Tensor6 from_dense(int dim, std::span<const double> values);

    int dim() const { return dim_; }
    double operator()(int i, int j, int h, int l, int m, int n) const {
        return c_[offset(i, j, h, l, m, n)];
    }
    double max_abs() const;
    std::vector<double> to_dense() const;

    Tensor6& operator+=(const Tensor6& other);
    Tensor6& operator-=(const Tensor6& other);
    Tensor6& operator*=(double s);
    friend Tensor6 operator+(Tensor6 a, const Tensor6& b) { return a += b; }
    friend Tensor6 operator-(Tensor6 a, const Tensor6& b) { return a -= b; }
    friend Tensor6 operator*(double s, Tensor6 a) { return a *= s; }
    friend Tensor6 operator*(Tensor6 a, double s) { return a *= s; }
    friend bool operator==(const Tensor6&, const Tensor6&) = default;

    static constexpr int offset(int i, int j, int h, int l, int m, int n) {
        return ((((i * 3 + j) * 3 + h) * 3 + l) * 3 + m) * 3 + n;
    }
    static std::array<int, 6> canonical(int i, int j, int h, int l, int m, int n);

private:
    int dim_;
    std::array<double, kSize> c_{};
};

// Max-abs componentwise difference.
double max_abs_diff(const Tensor4& a, const Tensor4& b);
double max_abs_diff(const Tensor6& a, const Tensor6& b);

class OrthogonalMap {
public:
    static constexpr double kOrthogonalityTol = 1e-12;

    static OrthogonalMap identity(int dim);
    // Rotation by `angle` in the x1-x2 plane (about x3 when dim == 3).
    static OrthogonalMap in_plane_rotation(int dim, double angle);
    static OrthogonalMap axis_rotation(const std::array<double, 3>& axis, double angle);
    // Reflection flipping the sign of coordinate `axis` (0-based).
    static OrthogonalMap reflection(int dim, int axis);
    // Haar-distributed draw; deterministic for a given seed.
    static OrthogonalMap random(int dim, std::uint64_t seed);
    // Row-major dim x dim; DomainError if Q Q^T differs from I by more
    // than kOrthogonalityTol in any entry.
    static OrthogonalMap from_matrix(int dim, std::span<const double> rows);

    int dim() const { return dim_; }
    double operator()(int i, int j) const { return q_[i * 3 + j]; }
    double determinant() const;

    // Product this * rhs: applying rhs first, then this.
    OrthogonalMap operator*(const OrthogonalMap& rhs) const;

private:
    OrthogonalMap(int dim, const std::array<double, 9>& q) : dim_(dim), q_(q) {}
    int dim_;
    std::array<double, 9> q_{};
};

Tensor4 rotate(const Tensor4& c, const OrthogonalMap& q);
Tensor6 rotate(const Tensor6& a, const OrthogonalMap& q);

// True iff max|T - rotate(T, Q)| <= tol * (1 + max|T|).
bool is_invariant_under(const Tensor4& t, const OrthogonalMap& q, double tol);
bool is_invariant_under(const Tensor6& t, const OrthogonalMap& q, double tol);

// Orthonormal bases (sqrt(2) weight on off-diagonal pairs).
// A basis element is a short list of (flat index, weight) entries.
struct BasisEntry {
    int offset;  // into the 3-dim layout (3^2 or 3^3 entries)
    double weight;
};
using BasisElement = std::vector<BasisEntry>;

int sym_basis_size(int dim);  // 3 or 6
int chi_basis_size(int dim);  // 6 or 18
// Symmetric second-order tensors; offset = i*3 + j.
std::vector<BasisElement> sym_basis(int dim);
// Third-order tensors with chi_ijk = chi_jik; offset = (i*3 + j)*3 + k.
std::vector<BasisElement> chi_basis(int dim);

Eigen::MatrixXd sym_matrix(const Tensor4& c);
Eigen::MatrixXd chi_matrix(const Tensor6& a);
// Inverse of sym_matrix; reads the upper triangle so the result is exactly
// major-symmetric.
Tensor4 tensor4_from_sym_matrix(int dim, const Eigen::MatrixXd& m);

// Ascending eigenvalues of a symmetric matrix (DomainError when asymmetric
// beyond 1e-10 relative to its largest entry).
Eigen::VectorXd sym_eigenvalues(const Eigen::MatrixXd& m);
double min_eigenvalue_sym(const Eigen::MatrixXd& m);

// ---------------------------------------------------------------------------

template <class F>
Tensor4 Tensor4::from_canonical(int dim, F&& f) {
    Tensor4 t(dim);
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j)
            for (int h = 0; h < dim; ++h)
                for (int k = 0; k < dim; ++k) {
                    auto r = canonical(i, j, h, k);
                    if (r == std::array<int, 4>{i, j, h, k}) t.c_[offset(i, j, h, k)] = f(i, j, h, k);
                }
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j)
            for (int h = 0; h < dim; ++h)
                for (int k = 0; k < dim; ++k) {
                    auto r = canonical(i, j, h, k);
                    t.c_[offset(i, j, h, k)] = t.c_[offset(r[0], r[1], r[2], r[3])];
                }
    return t;
}

template <class F>
Tensor6 Tensor6::from_canonical(int dim, F&& f) {
    Tensor6 t(dim);
    auto each = [dim](auto&& body) {
        for (int i = 0; i < dim; ++i)
            for (int j = 0; j < dim; ++j)
                for (int h = 0; h < dim; ++h)
                    for (int l = 0; l < dim; ++l)
                        for (int m = 0; m < dim; ++m)
                            for (int n = 0; n < dim; ++n) body(i, j, h, l, m, n);
    };
    each([&](int i, int j, int h, int l, int m, int n) {
        if (canonical(i, j, h, l, m, n) == std::array<int, 6>{i, j, h, l, m, n})
            t.c_[offset(i, j, h, l, m, n)] = f(i, j, h, l, m, n);
    });
    each([&](int i, int j, int h, int l, int m, int n) {
        auto r = canonical(i, j, h, l, m, n);
        t.c_[offset(i, j, h, l, m, n)] = t.c_[offset(r[0], r[1], r[2], r[3], r[4], r[5])];
    });
    return t;
}

}  // namespace sgehom
