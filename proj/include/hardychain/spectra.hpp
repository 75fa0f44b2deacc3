// spectra.hpp
// Closed-form spectra of the X and X_ij operators in the invariant subspaces:
// the cubic and quartic characteristic polynomials, the explicit X
// eigenvectors, and a report type that matches polynomial roots against the
// full operator spectrum.

#pragma once

#include <array>
#include <cmath>
#include <string>
#include <vector>

#include "hardychain/bell_operators.hpp"
#include "hardychain/eigh.hpp"
#include "hardychain/errors.hpp"
#include "hardychain/polynomial_roots.hpp"
#include "hardychain/state_vector.hpp"

namespace hardychain {

// Coefficients of  2u^3 - (n+1)u^2 + u(2^{1-n} - 2 + n) - (n 2^{-n} + 2^{-n} - 1).
inline std::array<double, 4> cubic_coefficients_X(int n) {
    const double t = std::ldexp(1.0, -n); // 2^{-n}
    return {2.0, -double(n + 1), 2.0 * t - 2.0 + n, -((n + 1) * t - 1.0)};
}

// Three eigenvalues of the X invariant subspace, ascending.
inline std::array<double, 3> cubic_eigenvalues_X(int n) {
    if (n < 2) throw invalid_member_error("cubic_eigenvalues_X: n must be >= 2");
    const auto c = cubic_coefficients_X(n);
    return cubic_real_roots(c[0], c[1], c[2], c[3]);
}

// Expanded coefficients of
//   {4(u-1)(2u-n+1) - 3(n-2)} {u(u-1) + 2^{-n}} + (4u-1)(u-1)(2u-1).
inline std::array<double, 5> quartic_coefficients_Xij(int n) {
    const double t = std::ldexp(1.0, -n);
    return {8.0, -4.0 * (n + 1), 8.0 * t + 5.0 * n - 8.0, 5.0 - n - 4.0 * (n + 1) * t,
            (n + 2) * t - 1.0};
}

// Four eigenvalues of the X_ij invariant subspace, ascending. They are
// independent of the index pair (i, j) in the default frame.
inline std::array<double, 4> quartic_eigenvalues_Xij(int n) {
    if (n < 3) throw invalid_member_error("quartic_eigenvalues_Xij: n must be >= 3");
    const auto c = quartic_coefficients_Xij(n);
    return quartic_real_roots(c[0], c[1], c[2], c[3], c[4]);
}

// Explicit X eigenvector for the eigenvalue mu:
//   |phi> + (mu-1) 2^{n/2} |chi> + 2^{(n+1)/2} (mu-1)/(2mu-n-1) |psi>,
// normalized. The denominator 2mu = n+1 never occurs at an actual root.
inline state_vector eigenstate_X(int n, double mu) {
    if (n < 2) throw invalid_member_error("eigenstate_X: n must be >= 2");
    const double denom = 2.0 * mu - n - 1.0;
    if (std::abs(denom) <= 1e-9)
        throw singularity_error("eigenstate_X: 2*mu = n+1 makes the coefficient singular");
    special_vectors sv(n);
    state_vector eta = sv.phi;
    eta += cplx((mu - 1.0) * std::pow(2.0, n / 2.0)) * sv.chi;
    eta += cplx(std::pow(2.0, (n + 1) / 2.0) * (mu - 1.0) / denom) * sv.psi;
    return eta.normalized();
}

struct root_match {
    double root = 0.0;
    double nearest_eigenvalue = 0.0;
    double distance = 0.0;
};

struct spectrum_report {
    int n = 0;
    member_kind kind = member_kind::X;
    std::vector<int> indices;
    std::vector<double> polynomial_roots; // ascending
    std::vector<double> full_spectrum;    // ascending, all 2^n eigenvalues
    std::vector<root_match> matches;
    int lhv_min = 0;
    int lhv_max = 0;

    double max_match_distance() const {
        double worst = 0.0;
        for (const auto& m : matches) worst = std::max(worst, m.distance);
        return worst;
    }
};

// Diagonalizes the full operator in the default frame and pairs each
// polynomial root with its nearest eigenvalue.
inline spectrum_report make_spectrum_report(int n, member_kind kind,
                                            const std::vector<int>& indices = {}) {
    spectrum_report rep;
    rep.n = n;
    rep.kind = kind;
    rep.indices = indices;
    cmatrix op(1);
    if (kind == member_kind::X) {
        op = build_X_operator(n);
        const auto r = cubic_eigenvalues_X(n);
        rep.polynomial_roots.assign(r.begin(), r.end());
        rep.lhv_max = n - 1;
    } else if (kind == member_kind::Xij) {
        if (indices.size() != 2)
            throw invalid_member_error("make_spectrum_report: Xij needs (i,j)");
        op = build_Xij_operator(n, indices[0], indices[1]);
        const auto r = quartic_eigenvalues_Xij(n);
        rep.polynomial_roots.assign(r.begin(), r.end());
        rep.lhv_max = n - 2;
    } else {
        throw invalid_member_error(
            "make_spectrum_report: closed-form spectra exist for X and Xij only");
    }
    rep.full_spectrum = eigh(op).values;
    for (double root : rep.polynomial_roots) {
        root_match m;
        m.root = root;
        m.distance = std::numeric_limits<double>::infinity();
        for (double ev : rep.full_spectrum) {
            const double d = std::abs(ev - root);
            if (d < m.distance) {
                m.distance = d;
                m.nearest_eigenvalue = ev;
            }
        }
        rep.matches.push_back(m);
    }
    return rep;
}

} // namespace hardychain
