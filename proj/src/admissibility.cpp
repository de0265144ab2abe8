#include "sgehom/admissibility.hpp"

#include <algorithm>
#include <cmath>

namespace sgehom {

namespace {

DefinitenessReport spectrum_report(const Eigen::MatrixXd& m, bool negative) {
    DefinitenessReport r;
    if (m.size() == 0) return r;
    const Eigen::VectorXd ev = sym_eigenvalues(m);
    r.min_eigenvalue = ev(0);
    r.max_eigenvalue = ev(ev.size() - 1);
    const double radius = std::max(std::fabs(r.min_eigenvalue), std::fabs(r.max_eigenvalue));
    const double critical = negative ? r.max_eigenvalue : r.min_eigenvalue;
    const double margin = kSpectralMargin * radius;
    r.definite = negative ? critical < -margin : critical > margin;
    r.marginal = std::fabs(critical) <= margin;
    return r;
}

}  // namespace

bool iso_nd_check(double K_t, double mu_t) { return K_t < 0.0 && mu_t < 0.0; }

bool cubic_nd_check(double K_t, double mu_t, double xi_t) { return iso_nd_check(K_t, mu_t) && xi_t + mu_t < 0.0; }

std::vector<bool> ortho_nd_conditions(const OrthoDiscrepancyConstants& d, Regime r) {
    const double l = d.lambda_t, m = d.mu_t;
    const double w1 = d.omega_I, w2 = d.omega_II, w3 = d.omega_III, w4 = d.omega_IV;
    const bool axial = l + 2 * m + w1 < 0;
    const bool minor2 = 4 * m * (l + m) + (l + 2 * m) * w1 > 0;
    if (r == Regime::PlaneStrain) return {m + d.xi_III < 0, axial, minor2};
    const double sixth = 8 * m * m * m - w1 * w3 * w3 + 4 * m * m * (w1 + w2 + 2 * w3) +
                         l * (12 * m * m + w1 * w2 + 4 * m * (w1 + w2 - w4) - w4 * w4) -
                         2 * m * (2 * w3 * w3 - w1 * (w2 + 2 * w3) + 2 * w3 * w4 + w4 * w4);
    return {m + d.xi_III < 0, m + d.xi_II < 0, m + d.xi_I < 0, axial, minor2, sixth < 0};
}

bool ortho_nd_check(const OrthoDiscrepancyConstants& d, Regime r) {
    const auto c = ortho_nd_conditions(d, r);
    return std::all_of(c.begin(), c.end(), [](bool b) { return b; });
}

DefinitenessReport spectral_nd_tensor4(const Tensor4& c) { return spectrum_report(sym_matrix(c), true); }

DefinitenessReport spectral_pd_tensor6(const Tensor6& a) { return spectrum_report(chi_matrix(a), false); }

double pd_threshold(double nu1, double nu2, Regime r) {
    if (nu1 == 0.5) throw DomainError("incompressible matrix");
    if (!(nu1 > -1.0 && nu1 < 0.5) || !(nu2 > -1.0 && nu2 <= 0.5))
        throw DomainError("nonphysical Poisson ratio");
    const double t = r == Regime::PlaneStrain ? (1 - 2 * nu2) / (1 - 2 * nu1)
                                              : (1 + nu1) * (1 - 2 * nu2) / ((1 + nu2) * (1 - 2 * nu1));
    return std::min(1.0, t);
}

}  // namespace sgehom
