#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "sgehom/assembly.hpp"

using namespace sgehom;

namespace {

std::vector<double> full4(const Tensor4& c) {
    const int d = c.dim();
    std::vector<double> out(static_cast<std::size_t>(d * d * d * d));
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            for (int h = 0; h < d; ++h)
                for (int k = 0; k < d; ++k) out[((i * d + j) * d + h) * d + k] = c(i, j, h, k);
    return out;
}

double diff_to_dense(const Tensor6& a, const std::vector<double>& ref) {
    const int d = a.dim();
    double m = 0.0;
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            for (int h = 0; h < d; ++h)
                for (int l = 0; l < d; ++l)
                    for (int p = 0; p < d; ++p)
                        for (int n = 0; n < d; ++n)
                            m = std::max(m, std::fabs(a(i, j, h, l, p, n) -
                                                      ref[((((i * 3 + j) * 3 + h) * 3 + l) * 3 + p) * 3 + n]));
    return m;
}

double rel6(const Tensor6& a, const Tensor6& b) { return max_abs_diff(a, b) / std::max(1e-300, b.max_abs()); }

OrthoDiscrepancyConstants random_ortho(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u(-3.0, 3.0);
    return {u(rng), u(rng), u(rng), u(rng), u(rng), u(rng), u(rng), u(rng), u(rng)};
}

}  // namespace

TEST_SUITE("sge_assembly") {
    TEST_CASE("trivial assemblies vanish") {
        for (int dim : {2, 3}) {
            CHECK(assemble_generic(Tensor4(dim), 0.2, 1.3).max_abs() == 0.0);
            CHECK(assemble_generic(iso_tensor4(-1.0, -2.0, dim), 0.0, 1.3).max_abs() == 0.0);
            CHECK(assemble_from_constants(iso_constants(0.0, 0.0, 0.1, 1.0, dim)).max_abs() == 0.0);
            CHECK(assemble_from_constants(ortho_constants({}, 0.1, 1.0, dim)).max_abs() == 0.0);
        }
        const HigherOrderConstants z = ortho_constants({}, 0.3, 2.0, 3);
        for (int k = 1; k <= 12; ++k) CHECK(z[k] == 0.0);
        CHECK(cubic_a6(0.0, 0.5, 2.0) == 0.0);
    }

    TEST_CASE("generic assembly matches the dense oracle") {
        std::mt19937_64 rng(5);
        for (int dim : {2, 3})
            for (int k = 0; k < 10; ++k) {
                const Tensor4 c = oracle::random_discrepancy(dim, oracle::Definiteness::Indefinite, rng);
                const Tensor6 a = assemble_generic(c, 0.07, 1.9);
                CHECK(diff_to_dense(a, oracle::dense_sge(full4(c), dim, 0.07, 1.9)) < 1e-14 * a.max_abs());
            }
    }

    TEST_CASE("constants of the closed-form cases") {
        const double f = 0.04, rho = 1.5, s = f * rho * rho;
        const HigherOrderConstants sph = iso_constants(3.0 / 7.0, -15.0 / 7.0, f, rho, 3).normalized(s);
        CHECK(sph[2] == doctest::Approx(-3.0 / 14.0).epsilon(1e-14));
        CHECK(sph[4] == doctest::Approx(15.0 / 14.0).epsilon(1e-14));
        CHECK(sph[5] == sph[4]);
        CHECK(sph[1] == 0.0);
        CHECK(sph[3] == 0.0);

        const HigherOrderConstants cyl = iso_constants(0.0, -2.0, f, rho, 2).normalized(s);
        CHECK(cyl[4] == doctest::Approx(1.0).epsilon(1e-14));

        // Aligned square holes at nu1 = 0, mu1 = 1 (K1 = 1).
        const HigherOrderConstants sq = cubic_constants({1.332, -3.728, -1.592, Regime::PlaneStrain}, f, rho).normalized(s);
        CHECK(sq[2] == doctest::Approx(2.0 * (0.599 - 0.932)).epsilon(1e-12));
        CHECK(sq[4] == doctest::Approx(1.864).epsilon(1e-12));
        CHECK(sq[6] == doctest::Approx(0.796).epsilon(1e-12));
        CHECK(sq.symmetry == SymmetryClass::Cubic);
        CHECK(cubic_a6(-0.796 * 2.0, f, rho) / s == doctest::Approx(0.796).epsilon(1e-14));
    }

    TEST_CASE("orthotropic constants follow the plane mapping") {
        const OrthoDiscrepancyConstants d{1, 2, 3, 4, 5, 6, 7, 8, 9};
        const HigherOrderConstants c = ortho_constants(d, 1.0, 1.0, 3);
        const double expect[12] = {0, -0.5, 0, -1, -1, -2.5, -2, -1.5, -3, -3.5, -4, -4.5};
        for (int k = 1; k <= 12; ++k) CHECK(c[k] == expect[k - 1]);
    }

    TEST_CASE("unit shear constants against the dense oracle") {
        // a4 = a5 = 1 is mu~ = -2 / (f rho^2) with lambda~ = 0.
        HigherOrderConstants c;
        c.dim = 2;
        c[4] = c[5] = 1.0;
        const Tensor6 a = assemble_from_constants(c);
        const auto ref = oracle::dense_sge(full4(iso_tensor4(0.0, -2.0, 2)), 2, 1.0, 1.0);
        CHECK(diff_to_dense(a, ref) < 1e-15);
        CHECK(a(0, 1, 0, 0, 1, 0) != 0.0);
    }

    TEST_CASE("representation equivalence") {
        std::mt19937_64 rng(77);
        std::uniform_real_distribution<double> u(-3.0, 3.0), fu(0.01, 0.3), ru(0.2, 3.0);
        for (int k = 0; k < 100; ++k) {
            const double f = fu(rng), rho = ru(rng);
            const int dim = 2 + k % 2;
            const double l = u(rng), m = u(rng), x = u(rng);
            CHECK(rel6(assemble_from_constants(iso_constants(l, m, f, rho, dim)),
                       assemble_generic(iso_tensor4(l, m, dim), f, rho)) < 1e-13);
            const Regime r = dim == 2 ? Regime::PlaneStrain : Regime::ThreeD;
            CHECK(rel6(assemble_from_constants(cubic_constants({l, m, x, r}, f, rho)),
                       assemble_generic(cubic_tensor4(l, m, x, dim), f, rho)) < 1e-13);
            const OrthoDiscrepancyConstants o = random_ortho(rng);
            CHECK(rel6(assemble_from_constants(ortho_constants(o, f, rho, dim)),
                       assemble_generic(ortho_tensor4(o, dim), f, rho)) < 1e-13);
        }
    }

    TEST_CASE("inconsistent constants are rejected") {
        HigherOrderConstants c = iso_constants(1.0, 2.0, 0.1, 1.0, 3);
        c[1] = 0.5;
        CHECK_THROWS_AS(assemble_from_constants(c), DomainError);
        c = iso_constants(1.0, 2.0, 0.1, 1.0, 3);
        c[5] = 0.0;
        CHECK_THROWS_AS(assemble_from_constants(c), DomainError);
        c = iso_constants(1.0, 2.0, 0.1, 1.0, 3);
        c[6] = 1.0;
        CHECK_THROWS_AS(assemble_from_constants(c), DomainError);
        c.symmetry = SymmetryClass::Cubic;
        c[9] = 1.0;
        CHECK_THROWS_AS(assemble_from_constants(c), DomainError);
        c.symmetry = SymmetryClass::Anisotropic;
        CHECK_THROWS_AS(assemble_from_constants(c), DomainError);
    }

    TEST_CASE("linearity and scaling") {
        std::mt19937_64 rng(8);
        for (int dim : {2, 3}) {
            const Tensor4 c1 = oracle::random_discrepancy(dim, oracle::Definiteness::Indefinite, rng);
            const Tensor4 c2 = oracle::random_discrepancy(dim, oracle::Definiteness::Negative, rng);
            const Tensor6 lhs = assemble_generic(2.5 * c1 + -0.75 * c2, 0.1, 1.2);
            const Tensor6 rhs = 2.5 * assemble_generic(c1, 0.1, 1.2) + -0.75 * assemble_generic(c2, 0.1, 1.2);
            CHECK(rel6(lhs, rhs) < 1e-14);
            for (double f : {0.01, 0.1, 0.37})
                for (double rho : {0.5, 1.0, 3.3}) CHECK(assemble_generic(c1, f, rho) == (f * rho * rho) * assemble_generic(c1, 1.0, 1.0));
        }
    }

    TEST_CASE("inversion") {
        CHECK(invert_to_discrepancy(Tensor6(3), 0.1, 1.0).max_abs() == 0.0);
        const Tensor4 iso = invert_to_discrepancy(assemble_generic(iso_tensor4(-1.0, -2.0, 3), 0.05, 1.0), 0.05, 1.0);
        CHECK(iso(0, 0, 1, 1) == doctest::Approx(-1.0).epsilon(1e-12));
        CHECK(iso(0, 1, 0, 1) == doctest::Approx(-2.0).epsilon(1e-12));

        std::mt19937_64 rng(99);
        for (int k = 0; k < 100; ++k) {
            const int dim = 2 + k % 2;
            const Tensor4 c = oracle::random_discrepancy(dim, oracle::Definiteness::Indefinite, rng);
            const Tensor4 back = invert_to_discrepancy(assemble_generic(c, 0.1, 2.0), 0.1, 2.0);
            CHECK(max_abs_diff(back, c) < 1e-12 * c.max_abs());
        }

        Tensor6 bad = assemble_generic(iso_tensor4(-1.0, -2.0, 3), 0.1, 1.0);
        bad += Tensor6::from_canonical(3, [](int i, int j, int h, int l, int m, int n) {
            return (i == 0 && j == 0 && h == 0 && l == 0 && m == 0 && n == 0) ? 1.0 : 0.0;
        });
        CHECK_THROWS_WITH_AS(invert_to_discrepancy(bad, 0.1, 1.0), doctest::Contains("not of dilute-SGE form"),
                             DomainError);
        CHECK_THROWS_AS(invert_to_discrepancy(Tensor6(3), 0.0, 1.0), DomainError);
        CHECK_THROWS_AS(invert_to_discrepancy(Tensor6(3), 0.1, 0.0), DomainError);
    }

    TEST_CASE("sign theorem") {
        std::mt19937_64 rng(2718);
        for (int k = 0; k < 200; ++k) {
            const int dim = 2 + k % 2;
            const Tensor4 nd = oracle::random_discrepancy(dim, oracle::Definiteness::Negative, rng);
            CHECK(min_eigenvalue_sym(chi_matrix(assemble_generic(nd, 0.1, 1.0))) > 0.0);
            const Tensor4 in = oracle::random_discrepancy(dim, oracle::Definiteness::Indefinite, rng);
            CHECK(min_eigenvalue_sym(chi_matrix(assemble_generic(in, 0.1, 1.0))) < 0.0);
        }
    }

    TEST_CASE("symmetry detection") {
        for (int dim : {2, 3}) {
            const Regime r = dim == 2 ? Regime::PlaneStrain : Regime::ThreeD;
            CHECK(detect_symmetry(assemble_from_constants(iso_constants(-1.0, -2.0, 0.1, 1.0, dim))) ==
                  SymmetryClass::Isotropic);
            CHECK(detect_symmetry(assemble_from_constants(cubic_constants({-1.0, -2.0, 0.7, r}, 0.1, 1.0))) ==
                  SymmetryClass::Cubic);
            const OrthoDiscrepancyConstants o{-1.0, -2.0, 0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7};
            CHECK(detect_symmetry(assemble_from_constants(ortho_constants(o, 0.1, 1.0, dim))) ==
                  SymmetryClass::Orthotropic);
            std::mt19937_64 rng(12 + dim);
            const Tensor4 c = oracle::random_discrepancy(dim, oracle::Definiteness::Indefinite, rng);
            CHECK(detect_symmetry(c) == SymmetryClass::Anisotropic);
            CHECK(detect_symmetry(assemble_generic(c, 0.1, 1.0)) == SymmetryClass::Anisotropic);
        }
        CHECK(detect_symmetry(Tensor6(3)) == SymmetryClass::Isotropic);
        CHECK(to_string(SymmetryClass::Orthotropic) == "orthotropic");
    }

    TEST_CASE("invariance transfers between the discrepancy and its assembly") {
        std::mt19937_64 rng(31);
        for (int k = 0; k < 100; ++k) {
            const int dim = 2 + k % 2;
            const Tensor4 c = k % 3 == 0   ? iso_tensor4(-1.0, -1.5, dim)
                              : k % 3 == 1 ? cubic_tensor4(-1.0, -1.5, 0.4, dim)
                                           : oracle::random_discrepancy(dim, oracle::Definiteness::Indefinite, rng);
            const OrthogonalMap q = k % 2 ? OrthogonalMap::random(dim, 500 + k)
                                          : OrthogonalMap::in_plane_rotation(dim, std::numbers::pi / 2);
            CHECK(is_invariant_under(c, q, 1e-10) == is_invariant_under(assemble_generic(c, 0.1, 1.3), q, 1e-10));
        }
        const Tensor6 a = assemble_generic(iso_tensor4(-0.5, -2.0, 3), 0.2, 1.0);
        for (std::uint64_t s = 0; s < 50; ++s) CHECK(is_invariant_under(a, OrthogonalMap::random(3, s), 1e-12));
    }
}
