// measurement.hpp
// Projective qubit measurements from Bloch axes, per-site measurement frames,
// n-fold coincidence events, and the two expectation paths (direct projector
// application vs. full operator matrix element).

#pragma once

#include <array>
#include <cmath>
#include <string>
#include <vector>

#include "hardychain/complex_matrix.hpp"
#include "hardychain/errors.hpp"
#include "hardychain/state_vector.hpp"

namespace hardychain {

using bloch_axis = std::array<double, 3>;

inline constexpr bloch_axis axis_x{1.0, 0.0, 0.0};
inline constexpr bloch_axis axis_y{0.0, 1.0, 0.0};
inline constexpr bloch_axis axis_z{0.0, 0.0, 1.0};

inline double axis_norm(const bloch_axis& a) {
    return std::sqrt(a[0] * a[0] + a[1] * a[1] + a[2] * a[2]);
}

// (I + sigma.axis)/2 for outcome 1, (I - sigma.axis)/2 for outcome 0.
inline cmatrix projector(const bloch_axis& axis, int outcome) {
    if (std::abs(axis_norm(axis) - 1.0) > 1e-12)
        throw validation_error("projector: axis must be a unit vector");
    if (outcome != 0 && outcome != 1)
        throw validation_error("projector: outcome must be 0 or 1");
    const double s = outcome == 1 ? 1.0 : -1.0;
    cmatrix p(2);
    p(0, 0) = (1.0 + s * axis[2]) / 2.0;
    p(1, 1) = (1.0 - s * axis[2]) / 2.0;
    p(0, 1) = s * cplx(axis[0], -axis[1]) / 2.0;
    p(1, 0) = s * cplx(axis[0], axis[1]) / 2.0;
    return p;
}

// One pair of measurement directions per site.
struct measurement_frame {
    int n = 0;
    std::vector<bloch_axis> unprimed;
    std::vector<bloch_axis> primed;

    measurement_frame() = default;
    measurement_frame(std::vector<bloch_axis> u, std::vector<bloch_axis> p)
        : n(static_cast<int>(u.size())), unprimed(std::move(u)), primed(std::move(p)) {
        validate();
    }

    // The frame behind the closed-form spectra: every unprimed axis z, every
    // primed axis x.
    static measurement_frame default_zx(int n) {
        return measurement_frame(std::vector<bloch_axis>(n, axis_z),
                                 std::vector<bloch_axis>(n, axis_x));
    }

    void validate() const {
        if (n < 1 || unprimed.size() != static_cast<std::size_t>(n) ||
            primed.size() != static_cast<std::size_t>(n))
            throw validation_error("measurement_frame: need one axis pair per site");
        for (const auto& a : unprimed)
            if (std::abs(axis_norm(a) - 1.0) > 1e-12)
                throw validation_error("measurement_frame: unprimed axis not unit length");
        for (const auto& a : primed)
            if (std::abs(axis_norm(a) - 1.0) > 1e-12)
                throw validation_error("measurement_frame: primed axis not unit length");
    }

    const bloch_axis& axis_for(int site, bool primed_setting) const {
        return primed_setting ? primed[site - 1] : unprimed[site - 1];
    }
};

enum class setting { unprimed, primed };

struct site_constraint {
    setting which = setting::unprimed;
    int outcome = 0;
};

// An n-fold coincidence: exactly one (setting, outcome) per site.
struct coincidence_event {
    int n = 0;
    std::vector<site_constraint> sites; // index 0 is site 1

    coincidence_event() = default;
    coincidence_event(int sites_, std::vector<site_constraint> cs)
        : n(sites_), sites(std::move(cs)) {
        if (n < 1 || sites.size() != static_cast<std::size_t>(n))
            throw validation_error("coincidence_event: one constraint per site required");
        for (const auto& c : sites)
            if (c.outcome != 0 && c.outcome != 1)
                throw validation_error("coincidence_event: outcomes must be 0 or 1");
    }

    static coincidence_event uniform(int n, setting s, int outcome) {
        return coincidence_event(n, std::vector<site_constraint>(n, {s, outcome}));
    }

    std::string to_string() const {
        std::string out;
        for (int i = 1; i <= n; ++i) {
            if (i > 1) out += ',';
            out += 'e';
            if (sites[i - 1].which == setting::primed) out += '\'';
            out += '_';
            out += std::to_string(i);
            out += '=';
            out += char('0' + sites[i - 1].outcome);
        }
        return out;
    }
};

// P(event) for a normalized pure state: applies each site projector directly
// to the state, never forming the 2^n x 2^n operator. Values are clamped to
// [0, 1] after a -1e-12 dust check.
inline double joint_probability(const state_vector& psi, const measurement_frame& frame,
                                const coincidence_event& event) {
    frame.validate();
    if (psi.sites() != frame.n || psi.sites() != event.n)
        throw dimension_error("joint_probability: state/frame/event size mismatch");
    if (!psi.is_normalized())
        throw validation_error("joint_probability: state must be normalized");
    state_vector projected = psi;
    for (int i = 1; i <= event.n; ++i) {
        const auto& c = event.sites[i - 1];
        projected = apply_single_site(
            projected, i,
            projector(frame.axis_for(i, c.which == setting::primed), c.outcome));
    }
    const cplx amp = inner(psi, projected);
    double p = amp.real();
    if (p < -1e-12 || p > 1.0 + 1e-12)
        throw validation_error("joint_probability: probability outside [0,1] tolerance");
    return std::min(1.0, std::max(0.0, p));
}

// Re <psi|A|psi>; rejects results with a non-negligible imaginary part, which
// only arise from non-Hermitian input.
inline double expectation(const state_vector& psi, const cmatrix& op) {
    if (static_cast<std::size_t>(op.dim()) != psi.dim())
        throw dimension_error("expectation: dimension mismatch");
    if (!psi.is_normalized())
        throw validation_error("expectation: state must be normalized");
    const cplx val = inner(psi, apply_operator(op, psi));
    if (std::abs(val.imag()) > 1e-10)
        throw validation_error("expectation: imaginary part exceeds 1e-10");
    return val.real();
}

} // namespace hardychain
