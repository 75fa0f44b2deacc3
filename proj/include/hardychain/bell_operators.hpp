// bell_operators.hpp
// Hermitian operators whose expectation values realize the chain members'
// probability combinations, the distinguished product vectors that span their
// small invariant subspaces, and the residual check that the subspaces close.

#pragma once

#include <array>
#include <cmath>
#include <vector>

#include "hardychain/chain_member.hpp"
#include "hardychain/complex_matrix.hpp"
#include "hardychain/errors.hpp"
#include "hardychain/measurement.hpp"
#include "hardychain/state_vector.hpp"

namespace hardychain {

namespace detail {

inline cmatrix factor_projector(const measurement_frame& frame, int site, site_factor f) {
    switch (f) {
        case site_factor::e: return projector(frame.axis_for(site, false), 1);
        case site_factor::e_bar: return projector(frame.axis_for(site, false), 0);
        case site_factor::ep: return projector(frame.axis_for(site, true), 1);
        case site_factor::ep_bar: return projector(frame.axis_for(site, true), 0);
    }
    throw validation_error("factor_projector: unknown factor");
}

} // namespace detail

// Builds the operator of any chain member as a signed sum of projector
// tensor products; sites a term leaves unconstrained contribute identity.
inline cmatrix member_operator(const chain_member& m, const measurement_frame& frame) {
    m.validate();
    frame.validate();
    if (m.n != frame.n) throw dimension_error("member_operator: member/frame n mismatch");
    const int dim = 1 << m.n;
    cmatrix out(dim);
    for (const auto& term : m.terms()) {
        std::vector<cmatrix> factors(m.n, cmatrix::identity(2));
        for (const auto& [site, f] : term.factors)
            factors[site - 1] = detail::factor_projector(frame, site, f);
        out += static_cast<cplx>(term.sign) * tensor(factors);
    }
    return out;
}

inline cmatrix build_X_operator(int n, const measurement_frame& frame) {
    if (n < 2) throw invalid_member_error("build_X_operator: n must be >= 2");
    return member_operator(chain_member::make_X(n), frame);
}
inline cmatrix build_X_operator(int n) {
    return build_X_operator(n, measurement_frame::default_zx(n));
}

inline cmatrix build_Xij_operator(int n, int i, int j, const measurement_frame& frame) {
    return member_operator(chain_member::make_Xij(n, i, j), frame);
}
inline cmatrix build_Xij_operator(int n, int i, int j) {
    return build_Xij_operator(n, i, j, measurement_frame::default_zx(n));
}

inline cmatrix build_Xijk_operator(int n, int i, int j, int k, const measurement_frame& frame) {
    return member_operator(chain_member::make_Xijk(n, i, j, k), frame);
}
inline cmatrix build_Xijk_operator(int n, int i, int j, int k) {
    return build_Xijk_operator(n, i, j, k, measurement_frame::default_zx(n));
}

inline cmatrix build_Xijkl_operator(int n, int i, int j, int k, int l,
                                    const measurement_frame& frame) {
    return member_operator(chain_member::make_Xijkl(n, i, j, k, l), frame);
}
inline cmatrix build_Xijkl_operator(int n, int i, int j, int k, int l) {
    return build_Xijkl_operator(n, i, j, k, l, measurement_frame::default_zx(n));
}

// The same quantity evaluated through the probability route: the signed sum
// of coincidence probabilities defining the member. Deliberately a separate
// code path from member_operator, so the two can cross-check each other.
// Sites a custom term leaves unconstrained are marginalized over the
// unprimed setting.
inline double member_probability_sum(const chain_member& m, const state_vector& psi,
                                     const measurement_frame& frame) {
    m.validate();
    double acc = 0.0;
    for (const auto& term : m.terms()) {
        std::vector<const site_constraint*> fixed(m.n + 1, nullptr);
        std::vector<site_constraint> storage;
        storage.reserve(term.factors.size());
        for (const auto& [site, f] : term.factors) {
            site_constraint c;
            c.which = (f == site_factor::ep || f == site_factor::ep_bar) ? setting::primed
                                                                         : setting::unprimed;
            c.outcome = (f == site_factor::e || f == site_factor::ep) ? 1 : 0;
            storage.push_back(c);
        }
        {
            std::size_t k = 0;
            for (const auto& [site, f] : term.factors) {
                (void)f;
                fixed[site] = &storage[k++];
            }
        }
        std::vector<int> open;
        for (int s = 1; s <= m.n; ++s)
            if (!fixed[s]) open.push_back(s);

        double term_prob = 0.0;
        const std::size_t combos = std::size_t(1) << open.size();
        for (std::size_t mask = 0; mask < combos; ++mask) {
            std::vector<site_constraint> cs(m.n);
            for (int s = 1; s <= m.n; ++s)
                if (fixed[s]) cs[s - 1] = *fixed[s];
            for (std::size_t b = 0; b < open.size(); ++b)
                cs[open[b] - 1] = {setting::unprimed, static_cast<int>((mask >> b) & 1)};
            term_prob += joint_probability(psi, frame, coincidence_event(m.n, cs));
        }
        acc += term.sign * term_prob;
    }
    return acc;
}

// Distinguished product vectors, all expressed in the computational basis
// (|0> = z+). phi is the all-(e=0) vector, chi the all-(x+) vector, psi_j
// flips site j to z+, and psi is their unnormalized sum.
struct special_vectors {
    int n = 0;
    state_vector phi;
    state_vector chi;
    std::vector<state_vector> psi_j;
    state_vector psi; // unnormalized

    explicit special_vectors(int n_) : n(n_) {
        const std::array<cplx, 2> z_plus{1.0, 0.0};
        const std::array<cplx, 2> z_minus{0.0, 1.0};
        const double r = 1.0 / std::sqrt(2.0);
        const std::array<cplx, 2> x_plus{r, r};
        phi = product_state(std::vector<std::array<cplx, 2>>(n, z_minus));
        chi = product_state(std::vector<std::array<cplx, 2>>(n, x_plus));
        psi = state_vector(n);
        for (int j = 1; j <= n; ++j) {
            std::vector<std::array<cplx, 2>> sites(n, x_plus);
            sites[j - 1] = z_plus;
            psi_j.push_back(product_state(sites));
            psi += psi_j.back();
        }
    }

    state_vector psi_pair(int i, int j) const {
        const std::array<cplx, 2> z_plus{1.0, 0.0};
        const std::array<cplx, 2> z_minus{0.0, 1.0};
        const double r = 1.0 / std::sqrt(2.0);
        const std::array<cplx, 2> x_plus{r, r};
        std::vector<std::array<cplx, 2>> sites(n, x_plus);
        sites[i - 1] = z_plus;
        sites[j - 1] = z_minus;
        return product_state(sites);
    }
};

namespace detail {

// Orthonormalizes span (modified Gram-Schmidt) and returns the largest
// out-of-span residual norm among the images.
inline double max_out_of_span_residual(const std::vector<state_vector>& span,
                                       const std::vector<state_vector>& images) {
    std::vector<state_vector> basis;
    for (const auto& v : span) {
        state_vector w = v;
        for (const auto& q : basis) w += (-inner(q, w)) * q;
        const double nrm = w.norm();
        if (nrm > 1e-12) {
            w *= cplx(1.0 / nrm);
            basis.push_back(w);
        }
    }
    double worst = 0.0;
    for (const auto& img : images) {
        state_vector r = img;
        for (const auto& q : basis) r += (-inner(q, r)) * q;
        worst = std::max(worst, r.norm());
    }
    return worst;
}

} // namespace detail

// Applies the member's operator (default frame) to its distinguished vectors
// and measures how far the images stick out of the claimed invariant span.
inline double verify_invariant_subspace(int n, member_kind kind,
                                        const std::vector<int>& indices = {}) {
    const auto frame = measurement_frame::default_zx(n);
    special_vectors sv(n);
    std::vector<state_vector> span;
    cmatrix op(1 << n);
    if (kind == member_kind::X) {
        op = build_X_operator(n, frame);
        span = {sv.phi, sv.chi, sv.psi};
    } else if (kind == member_kind::Xij) {
        if (indices.size() != 2)
            throw invalid_member_error("verify_invariant_subspace: Xij needs (i,j)");
        const int i = indices[0], j = indices[1];
        op = build_Xij_operator(n, i, j, frame);
        const double rt2 = std::sqrt(2.0);
        state_vector combo = sv.psi_pair(i, j) + cplx(rt2) * sv.psi_j[j - 1];
        state_vector rest(n);
        for (int l = 1; l <= n; ++l)
            if (l != i && l != j) rest += sv.psi_j[l - 1];
        span = {sv.phi, sv.chi, combo, rest};
    } else {
        throw invalid_member_error(
            "verify_invariant_subspace: closed subspaces are established for X and Xij only");
    }
    std::vector<state_vector> images;
    images.reserve(span.size());
    for (const auto& v : span) images.push_back(apply_operator(op, v));
    return detail::max_out_of_span_residual(span, images);
}

} // namespace hardychain
