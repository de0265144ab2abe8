#include "sgehom/tensor.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <string>
#include <utility>

namespace sgehom {

void require_dim(int dim) {
    if (dim != 2 && dim != 3) throw DimensionError("tensor dimension must be 2 or 3, got " + std::to_string(dim));
}

namespace {

int ipow(int base, int e) {
    int r = 1;
    while (e-- > 0) r *= base;
    return r;
}

void require_same_dim(int a, int b) {
    if (a != b) throw DimensionError("dimension mismatch: " + std::to_string(a) + " vs " + std::to_string(b));
}

}  // namespace

// ---------------------------------------------------------------- Tensor4

Tensor4::Tensor4(int dim) : dim_(dim) { require_dim(dim); }

std::array<int, 4> Tensor4::canonical(int i, int j, int h, int k) {
    if (i > j) std::swap(i, j);
    if (h > k) std::swap(h, k);
    if (std::pair{i, j} > std::pair{h, k}) {
        std::swap(i, h);
        std::swap(j, k);
    }
    return {i, j, h, k};
}

Tensor4 Tensor4::from_dense(int dim, std::span<const double> values) {
    require_dim(dim);
    const int d = dim;
    if (static_cast<int>(values.size()) != ipow(d, 4))
        throw DimensionError("expected " + std::to_string(ipow(d, 4)) + " components");
    auto at = [&](int i, int j, int h, int k) { return values[((i * d + j) * d + h) * d + k]; };
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            for (int h = 0; h < d; ++h)
                for (int k = 0; k < d; ++k) {
                    const double v = at(i, j, h, k);
                    if (v != at(j, i, h, k) || v != at(i, j, k, h) || v != at(h, k, i, j))
                        throw SymmetryError("fourth-order tensor lacks minor/major symmetry");
                }
    return from_canonical(dim, at);
}

double Tensor4::max_abs() const {
    double m = 0.0;
    for (double v : c_) m = std::max(m, std::abs(v));
    return m;
}

std::vector<double> Tensor4::to_dense() const {
    std::vector<double> out;
    out.reserve(ipow(dim_, 4));
    for (int i = 0; i < dim_; ++i)
        for (int j = 0; j < dim_; ++j)
            for (int h = 0; h < dim_; ++h)
                for (int k = 0; k < dim_; ++k) out.push_back((*this)(i, j, h, k));
    return out;
}

Tensor4& Tensor4::operator+=(const Tensor4& other) {
    require_same_dim(dim_, other.dim_);
    for (int a = 0; a < kSize; ++a) c_[a] += other.c_[a];
    return *this;
}

Tensor4& Tensor4::operator-=(const Tensor4& other) {
    require_same_dim(dim_, other.dim_);
    for (int a = 0; a < kSize; ++a) c_[a] -= other.c_[a];
    return *this;
}

Tensor4& Tensor4::operator*=(double s) {
    for (double& v : c_) v *= s;
    return *this;
}

// ---------------------------------------------------------------- Tensor6

Tensor6::Tensor6(int dim) : dim_(dim) { require_dim(dim); }

std::array<int, 6> Tensor6::canonical(int i, int j, int h, int l, int m, int n) {
    if (i > j) std::swap(i, j);
    if (l > m) std::swap(l, m);
    if (std::tuple{i, j, h} > std::tuple{l, m, n}) {
        std::swap(i, l);
        std::swap(j, m);
        std::swap(h, n);
    }
    return {i, j, h, l, m, n};
}

Tensor6 Tensor6::from_dense(int dim, std::span<const double> values) {
    require_dim(dim);
    const int d = dim;
    if (static_cast<int>(values.size()) != ipow(d, 6))
        throw DimensionError("expected " + std::to_string(ipow(d, 6)) + " components");
    auto at = [&](int i, int j, int h, int l, int m, int n) {
        return values[((((i * d + j) * d + h) * d + l) * d + m) * d + n];
    };
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            for (int h = 0; h < d; ++h)
                for (int l = 0; l < d; ++l)
                    for (int m = 0; m < d; ++m)
                        for (int n = 0; n < d; ++n) {
                            const double v = at(i, j, h, l, m, n);
                            if (v != at(j, i, h, l, m, n) || v != at(i, j, h, m, l, n) || v != at(l, m, n, i, j, h))
                                throw SymmetryError("sixth-order tensor lacks its index symmetries");
                        }
    return from_canonical(dim, at);
}

double Tensor6::max_abs() const {
    double m = 0.0;
    for (double v : c_) m = std::max(m, std::abs(v));
    return m;
}

std::vector<double> Tensor6::to_dense() const {
    std::vector<double> out;
    out.reserve(ipow(dim_, 6));
    for (int i = 0; i < dim_; ++i)
        for (int j = 0; j < dim_; ++j)
            for (int h = 0; h < dim_; ++h)
                for (int l = 0; l < dim_; ++l)
                    for (int m = 0; m < dim_; ++m)
                        for (int n = 0; n < dim_; ++n) out.push_back((*this)(i, j, h, l, m, n));
    return out;
}

Tensor6& Tensor6::operator+=(const Tensor6& other) {
    require_same_dim(dim_, other.dim_);
    for (int a = 0; a < kSize; ++a) c_[a] += other.c_[a];
    return *this;
}

Tensor6& Tensor6::operator-=(const Tensor6& other) {
    require_same_dim(dim_, other.dim_);
    for (int a = 0; a < kSize; ++a) c_[a] -= other.c_[a];
    return *this;
}

Tensor6& Tensor6::operator*=(double s) {
    for (double& v : c_) v *= s;
    return *this;
}

double max_abs_diff(const Tensor4& a, const Tensor4& b) {
    require_same_dim(a.dim(), b.dim());
    return (a - b).max_abs();
}

double max_abs_diff(const Tensor6& a, const Tensor6& b) {
    require_same_dim(a.dim(), b.dim());
    return (a - b).max_abs();
}

// ---------------------------------------------------------- OrthogonalMap

OrthogonalMap OrthogonalMap::identity(int dim) {
    require_dim(dim);
    return OrthogonalMap(dim, {1, 0, 0, 0, 1, 0, 0, 0, 1});
}

OrthogonalMap OrthogonalMap::in_plane_rotation(int dim, double angle) {
    require_dim(dim);
    const double c = std::cos(angle), s = std::sin(angle);
    return OrthogonalMap(dim, {c, -s, 0, s, c, 0, 0, 0, 1});
}

OrthogonalMap OrthogonalMap::axis_rotation(const std::array<double, 3>& axis, double angle) {
    const double norm = std::sqrt(axis[0] * axis[0] + axis[1] * axis[1] + axis[2] * axis[2]);
    if (!(norm > 0.0)) throw DomainError("rotation axis must be nonzero");
    const double x = axis[0] / norm, y = axis[1] / norm, z = axis[2] / norm;
    const double c = std::cos(angle), s = std::sin(angle), t = 1.0 - c;
    // Rodrigues
    return OrthogonalMap(3, {t * x * x + c, t * x * y - s * z, t * x * z + s * y,
                             t * x * y + s * z, t * y * y + c, t * y * z - s * x,
                             t * x * z - s * y, t * y * z + s * x, t * z * z + c});
}

OrthogonalMap OrthogonalMap::reflection(int dim, int axis) {
    require_dim(dim);
    if (axis < 0 || axis >= dim) throw DimensionError("reflection axis out of range");
    std::array<double, 9> q{1, 0, 0, 0, 1, 0, 0, 0, 1};
    q[axis * 3 + axis] = -1.0;
    return OrthogonalMap(dim, q);
}

OrthogonalMap OrthogonalMap::random(int dim, std::uint64_t seed) {
    require_dim(dim);
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> normal(0.0, 1.0);
    Eigen::MatrixXd g(dim, dim);
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) g(i, j) = normal(rng);
    Eigen::HouseholderQR<Eigen::MatrixXd> qr(g);
    Eigen::MatrixXd q = qr.householderQ();
    Eigen::MatrixXd r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (int j = 0; j < dim; ++j)
        if (r(j, j) < 0) q.col(j) *= -1.0;
    std::array<double, 9> out{1, 0, 0, 0, 1, 0, 0, 0, 1};
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) out[i * 3 + j] = q(i, j);
    return OrthogonalMap(dim, out);
}

OrthogonalMap OrthogonalMap::from_matrix(int dim, std::span<const double> rows) {
    require_dim(dim);
    if (static_cast<int>(rows.size()) != dim * dim) throw DimensionError("orthogonal map needs dim*dim entries");
    std::array<double, 9> q{1, 0, 0, 0, 1, 0, 0, 0, 1};
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) q[i * 3 + j] = rows[i * dim + j];
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) {
            double s = 0.0;
            for (int k = 0; k < dim; ++k) s += q[i * 3 + k] * q[j * 3 + k];
            if (std::abs(s - (i == j ? 1.0 : 0.0)) > kOrthogonalityTol)
                throw DomainError("matrix is not orthogonal within 1e-12");
        }
    return OrthogonalMap(dim, q);
}

double OrthogonalMap::determinant() const {
    const auto& q = q_;
    if (dim_ == 2) return q[0] * q[4] - q[1] * q[3];
    return q[0] * (q[4] * q[8] - q[5] * q[7]) - q[1] * (q[3] * q[8] - q[5] * q[6]) +
           q[2] * (q[3] * q[7] - q[4] * q[6]);
}

OrthogonalMap OrthogonalMap::operator*(const OrthogonalMap& rhs) const {
    require_same_dim(dim_, rhs.dim_);
    std::array<double, 9> out{};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            for (int k = 0; k < 3; ++k) out[i * 3 + j] += q_[i * 3 + k] * rhs.q_[k * 3 + j];
    return OrthogonalMap(dim_, out);
}

// --------------------------------------------------------------- rotation

namespace {

// Contract one slot of a dense order-N array (3-layout) with Q:
// out[..., a, ...] = sum_b Q(a, b) in[..., b, ...].
template <std::size_t N>
void contract_slot(const std::array<double, N>& in, std::array<double, N>& out, int slot, int order,
                   int dim, const OrthogonalMap& q) {
    int stride = 1;
    for (int s = order - 1; s > slot; --s) stride *= 3;
    out.fill(0.0);
    for (std::size_t idx = 0; idx < N; ++idx) {
        const double v = in[idx];
        if (v == 0.0) continue;
        const int b = static_cast<int>(idx / stride) % 3;
        if (b >= dim) continue;
        const std::size_t base = idx - static_cast<std::size_t>(b) * stride;
        for (int a = 0; a < dim; ++a) out[base + static_cast<std::size_t>(a) * stride] += q(a, b) * v;
    }
}

}  // namespace

Tensor4 rotate(const Tensor4& c, const OrthogonalMap& q) {
    require_same_dim(c.dim(), q.dim());
    std::array<double, 81> a{}, b{};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            for (int h = 0; h < 3; ++h)
                for (int k = 0; k < 3; ++k) a[Tensor4::offset(i, j, h, k)] = c(i, j, h, k);
    for (int slot = 0; slot < 4; ++slot) {
        contract_slot(a, b, slot, 4, c.dim(), q);
        std::swap(a, b);
    }
    return Tensor4::from_canonical(c.dim(), [&](int i, int j, int h, int k) { return a[Tensor4::offset(i, j, h, k)]; });
}

Tensor6 rotate(const Tensor6& t, const OrthogonalMap& q) {
    require_same_dim(t.dim(), q.dim());
    std::array<double, 729> a{}, b{};
    const int d = t.dim();
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            for (int h = 0; h < d; ++h)
                for (int l = 0; l < d; ++l)
                    for (int m = 0; m < d; ++m)
                        for (int n = 0; n < d; ++n) a[Tensor6::offset(i, j, h, l, m, n)] = t(i, j, h, l, m, n);
    for (int slot = 0; slot < 6; ++slot) {
        contract_slot(a, b, slot, 6, d, q);
        std::swap(a, b);
    }
    return Tensor6::from_canonical(
        d, [&](int i, int j, int h, int l, int m, int n) { return a[Tensor6::offset(i, j, h, l, m, n)]; });
}

bool is_invariant_under(const Tensor4& t, const OrthogonalMap& q, double tol) {
    if (!(tol > 0.0)) throw std::invalid_argument("tolerance must be positive");
    return max_abs_diff(t, rotate(t, q)) <= tol * (1.0 + t.max_abs());
}

bool is_invariant_under(const Tensor6& t, const OrthogonalMap& q, double tol) {
    if (!(tol > 0.0)) throw std::invalid_argument("tolerance must be positive");
    return max_abs_diff(t, rotate(t, q)) <= tol * (1.0 + t.max_abs());
}

// ------------------------------------------------------------------ bases

int sym_basis_size(int dim) {
    require_dim(dim);
    return dim * (dim + 1) / 2;
}

int chi_basis_size(int dim) { return sym_basis_size(dim) * dim; }

std::vector<BasisElement> sym_basis(int dim) {
    require_dim(dim);
    std::vector<BasisElement> basis;
    // Diagonal first, then (0,1), (0,2), (1,2).
    for (int i = 0; i < dim; ++i) basis.push_back({{i * 3 + i, 1.0}});
    const double w = 1.0 / std::sqrt(2.0);
    for (int i = 0; i < dim; ++i)
        for (int j = i + 1; j < dim; ++j) basis.push_back({{i * 3 + j, w}, {j * 3 + i, w}});
    return basis;
}

std::vector<BasisElement> chi_basis(int dim) {
    std::vector<BasisElement> basis;
    for (const auto& e : sym_basis(dim))
        for (int k = 0; k < dim; ++k) {
            BasisElement b;
            for (const auto& entry : e) b.push_back({entry.offset * 3 + k, entry.weight});
            basis.push_back(std::move(b));
        }
    return basis;
}

Eigen::MatrixXd sym_matrix(const Tensor4& c) {
    const auto basis = sym_basis(c.dim());
    const int n = static_cast<int>(basis.size());
    Eigen::MatrixXd m(n, n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            double s = 0.0;
            for (const auto& ea : basis[a])
                for (const auto& eb : basis[b])
                    s += ea.weight * eb.weight * c(ea.offset / 3, ea.offset % 3, eb.offset / 3, eb.offset % 3);
            m(a, b) = s;
        }
    return m;
}

Eigen::MatrixXd chi_matrix(const Tensor6& t) {
    const auto basis = chi_basis(t.dim());
    const int n = static_cast<int>(basis.size());
    Eigen::MatrixXd m(n, n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            double s = 0.0;
            for (const auto& ea : basis[a])
                for (const auto& eb : basis[b]) {
                    const int x = ea.offset, y = eb.offset;
                    s += ea.weight * eb.weight * t(x / 9, (x / 3) % 3, x % 3, y / 9, (y / 3) % 3, y % 3);
                }
            m(a, b) = s;
        }
    return m;
}

Tensor4 tensor4_from_sym_matrix(int dim, const Eigen::MatrixXd& m) {
    const int n = sym_basis_size(dim);
    if (m.rows() != n || m.cols() != n) throw DimensionError("matrix size does not match the symmetric basis");
    // Position of each symmetric pair in the basis, and its weight.
    std::array<int, 9> slot{};
    std::array<double, 9> weight{};
    const auto basis = sym_basis(dim);
    for (int a = 0; a < n; ++a)
        for (const auto& e : basis[a]) {
            slot[e.offset] = a;
            weight[e.offset] = e.weight;
        }
    return Tensor4::from_canonical(dim, [&](int i, int j, int h, int k) {
        const int a = slot[i * 3 + j], b = slot[h * 3 + k];
        return m(std::min(a, b), std::max(a, b)) * weight[i * 3 + j] * weight[h * 3 + k];
    });
}

Eigen::VectorXd sym_eigenvalues(const Eigen::MatrixXd& m) {
    if (m.rows() != m.cols()) throw DimensionError("matrix must be square");
    const double scale = std::max(1.0, m.cwiseAbs().maxCoeff());
    if ((m - m.transpose()).cwiseAbs().maxCoeff() > 1e-10 * scale)
        throw DomainError("matrix is not symmetric within 1e-10");
    if (m.size() == 0) return Eigen::VectorXd();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(0.5 * (m + m.transpose()), Eigen::EigenvaluesOnly);
    return solver.eigenvalues();  // ascending
}

double min_eigenvalue_sym(const Eigen::MatrixXd& m) {
    const auto ev = sym_eigenvalues(m);
    if (ev.size() == 0) throw DimensionError("empty matrix");
    return ev(0);
}

}  // namespace sgehom
