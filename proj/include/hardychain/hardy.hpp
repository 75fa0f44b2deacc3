// hardy.hpp
// Hardy-type local-reality constraints: the premise/conclusion event lists for
// each variant, the report produced by checking them on a state, and the
// closed-form three-qubit stationary family with its measurement frame.

#pragma once

#include <array>
#include <cmath>
#include <string>
#include <utility>
#include <vector>

#include "hardychain/errors.hpp"
#include "hardychain/measurement.hpp"
#include "hardychain/state_vector.hpp"

namespace hardychain {

enum class hardy_kind { standard, variant_i, variant_ii, variant_iii };

inline std::string hardy_kind_name(hardy_kind k) {
    switch (k) {
        case hardy_kind::standard: return "standard";
        case hardy_kind::variant_i: return "variant-i";
        case hardy_kind::variant_ii: return "variant-ii";
        case hardy_kind::variant_iii: return "variant-iii";
    }
    return "?";
}

struct hardy_variant {
    hardy_kind kind = hardy_kind::standard;
    int n = 0;
    std::vector<int> indices; // () / (i,j) / (i,j,k) / (i,j,k,l)

    hardy_variant() = default;
    hardy_variant(hardy_kind k, int sites, std::vector<int> idx = {})
        : kind(k), n(sites), indices(std::move(idx)) {
        validate();
    }

    void validate() const {
        for (int i : indices)
            if (i < 1 || i > n) throw invalid_member_error("hardy variant: index outside [1,n]");
        for (std::size_t a = 1; a < indices.size(); ++a)
            if (indices[a - 1] >= indices[a])
                throw invalid_member_error("hardy variant: indices must be strictly increasing");
        switch (kind) {
            case hardy_kind::standard:
                if (n < 2 || !indices.empty())
                    throw invalid_member_error("standard variant: n >= 2, no indices");
                break;
            case hardy_kind::variant_i:
                if (n < 3 || indices.size() != 2 || !(indices[1] < n))
                    throw invalid_member_error("variant (i): needs i < j < n, n >= 3");
                break;
            case hardy_kind::variant_ii:
                if (n < 4 || indices.size() != 3 || !(indices[2] < n))
                    throw invalid_member_error("variant (ii): needs i < j < k < n, n >= 4");
                break;
            case hardy_kind::variant_iii:
                if (n < 5 || indices.size() != 4 || !(indices[3] < n))
                    throw invalid_member_error("variant (iii): needs i < j < k < l < n, n >= 5");
                break;
        }
    }

    // The event whose probability the argument requires to stay positive.
    coincidence_event target_event() const {
        return coincidence_event::uniform(n, setting::primed, 1);
    }

    // The event local reality then forces: all unprimed outcomes zero.
    coincidence_event conclusion_event() const {
        return coincidence_event::uniform(n, setting::unprimed, 0);
    }

    // Premise events whose probabilities all vanish in the argument.
    std::vector<coincidence_event> zero_events() const {
        validate();
        std::vector<coincidence_event> out;
        auto single = [&](int l) {
            auto cs = std::vector<site_constraint>(n, {setting::primed, 1});
            cs[l - 1] = {setting::unprimed, 1};
            return coincidence_event(n, std::move(cs));
        };
        auto flip = [&](const std::vector<int>& ones, const std::vector<int>& zeros) {
            auto cs = std::vector<site_constraint>(n, {setting::primed, 1});
            for (int s : ones) cs[s - 1] = {setting::unprimed, 1};
            for (int s : zeros) cs[s - 1] = {setting::unprimed, 0};
            return coincidence_event(n, std::move(cs));
        };
        switch (kind) {
            case hardy_kind::standard:
                for (int l = 1; l <= n; ++l) out.push_back(single(l));
                break;
            case hardy_kind::variant_i: {
                out.push_back(flip({indices[0]}, {indices[1]}));
                for (int l = 1; l <= n; ++l)
                    if (l != indices[0]) out.push_back(single(l));
                break;
            }
            case hardy_kind::variant_ii: {
                out.push_back(flip({indices[0]}, {indices[1], indices[2]}));
                for (int l = 1; l <= n; ++l)
                    if (l != indices[0]) out.push_back(single(l));
                break;
            }
            case hardy_kind::variant_iii: {
                out.push_back(flip({indices[0]}, {indices[1]}));
                out.push_back(flip({indices[2]}, {indices[3]}));
                for (int l = 1; l <= n; ++l)
                    if (l != indices[0] && l != indices[2]) out.push_back(single(l));
                break;
            }
        }
        return out;
    }

    // Everything the maximal-violation search pins to zero: the premise
    // events plus the conclusion event itself.
    std::vector<coincidence_event> optimization_zero_events() const {
        auto out = zero_events();
        out.insert(out.begin(), conclusion_event());
        return out;
    }
};

struct hardy_report {
    double target = 0.0; // P(e'_k = 1 for all k)
    std::vector<std::pair<std::string, double>> zero_terms;
    double conclusion = 0.0; // P(e_k = 0 for all k)
    bool premises_hold = false;
    bool lhv_violated = false;
};

// Evaluates the variant's probabilities on a state/frame. The premises hold
// when the target exceeds tau and every premise term stays below tau; local
// reality then demands conclusion >= target, so a conclusion that falls short
// by more than tau flags a violation.
inline hardy_report check_hardy(const state_vector& psi, const measurement_frame& frame,
                                const hardy_variant& variant, double tau = 1e-9) {
    variant.validate();
    if (psi.sites() != variant.n || frame.n != variant.n)
        throw dimension_error("check_hardy: state/frame/variant size mismatch");
    hardy_report rep;
    rep.target = joint_probability(psi, frame, variant.target_event());
    rep.conclusion = joint_probability(psi, frame, variant.conclusion_event());
    bool zeros_ok = true;
    for (const auto& ev : variant.zero_events()) {
        const double p = joint_probability(psi, frame, ev);
        rep.zero_terms.emplace_back(ev.to_string(), p);
        zeros_ok = zeros_ok && p <= tau;
    }
    rep.premises_hold = rep.target > tau && zeros_ok;
    rep.lhv_violated = rep.premises_hold && rep.conclusion < rep.target - tau;
    return rep;
}

// Per-site rotation parameters (a_i, b_i) with a_i^2 + b_i^2 = 1, relating the
// primed basis to the unprimed one; all real.
struct local_unitary_params {
    std::vector<std::array<double, 2>> ab; // site 1 first

    explicit local_unitary_params(std::vector<std::array<double, 2>> v) : ab(std::move(v)) {
        for (const auto& [a, b] : ab)
            if (std::abs(a * a + b * b - 1.0) > 1e-12)
                throw validation_error("local_unitary_params: a^2 + b^2 must be 1");
    }
    int sites() const { return static_cast<int>(ab.size()); }
};

// Primed measurement axis induced by (a, b): the primed outcome-1 eigenvector
// is b|e=0> + a|e=1>, which is the +1 eigenvector of sigma.(2ab, 0, a^2-b^2).
inline bloch_axis primed_axis_from_ab(double a, double b) {
    return {2.0 * a * b, 0.0, a * a - b * b};
}

// Frame with unprimed axes fixed to z and primed axes generated by (a_i, b_i).
inline measurement_frame frame_from_params(const local_unitary_params& params) {
    const int n = params.sites();
    std::vector<bloch_axis> primed;
    primed.reserve(n);
    for (const auto& [a, b] : params.ab) primed.push_back(primed_axis_from_ab(a, b));
    return measurement_frame(std::vector<bloch_axis>(n, axis_z), std::move(primed));
}

// P(e'_k = 1 for all k) at the three-qubit stationary point, as a function of
// u = b1^2 b2^2 and v = b3^2:
//   P = u v (1-v)(1-u) / (v(1-u) + u).
// Defined on the closed unit square except where the denominator degenerates.
inline double stationary_probability_n3(double u, double v) {
    if (!(u >= 0.0 && u <= 1.0 && v >= 0.0 && v <= 1.0))
        throw validation_error("stationary_probability_n3: (u, v) outside [0,1]^2");
    const double denom = v * (1.0 - u) + u;
    if (denom <= 1e-300)
        throw validation_error("stationary_probability_n3: degenerate denominator at u=v=0");
    return u * v * (1.0 - v) * (1.0 - u) / denom;
}

// The three-qubit state that makes P(e'_k = 1 for all k) stationary for given
// per-site parameters. Amplitudes are listed by outcome labels (d1,d2,d3) of
// the unprimed measurements; with z-axis unprimed measurements the outcome
// d = 1 corresponds to the computational |0>.
inline state_vector construct_stationary_state_n3(const local_unitary_params& params) {
    if (params.sites() != 3)
        throw dimension_error("construct_stationary_state_n3: needs exactly 3 sites");
    const double a1 = params.ab[0][0], b1 = params.ab[0][1];
    const double a2 = params.ab[1][0], b2 = params.ab[1][1];
    const double a3 = params.ab[2][0], b3 = params.ab[2][1];
    const double u = b1 * b1 * b2 * b2;
    if (!(u < 1.0))
        throw validation_error("construct_stationary_state_n3: requires b1^2 b2^2 < 1");
    const double scale2 = b3 * b3 * (1.0 - u) + u;
    if (scale2 <= 1e-300)
        throw singularity_error("construct_stationary_state_n3: degenerate normalization");
    const double norm = std::sqrt((1.0 - u) * scale2);

    // coefficients c_{d1 d2 d3}, d = unprimed outcome
    double c[2][2][2] = {};
    c[0][0][0] = 0.0;
    c[0][0][1] = b3 * (1.0 - u);
    c[0][1][0] = a2 * a3 * b1 * b1 * b2;
    c[0][1][1] = -b1 * b1 * a2 * b2 * b3;
    c[1][0][0] = a1 * b1 * b2 * b2 * a3;
    c[1][0][1] = -a1 * b1 * b2 * b2 * b3;
    c[1][1][0] = a1 * a2 * a3 * b1 * b2;
    c[1][1][1] = -a1 * a2 * b1 * b2 * b3;

    state_vector psi(3);
    for (int d1 = 0; d1 <= 1; ++d1)
        for (int d2 = 0; d2 <= 1; ++d2)
            for (int d3 = 0; d3 <= 1; ++d3) {
                // outcome d maps to computational bit 1-d, site 1 most significant
                const std::size_t idx = (std::size_t(1 - d1) << 2) |
                                        (std::size_t(1 - d2) << 1) | std::size_t(1 - d3);
                psi[idx] = c[d1][d2][d3] / norm;
            }
    return psi;
}

struct scan_result {
    double u = 0.0;
    double v = 0.0;
    double value = 0.0;
};

// Grid scan of the stationary surface over (0,1)^2 followed by local zooming
// around the best cell. Deterministic.
inline scan_result scan_stationary_surface_n3(int resolution) {
    if (resolution < 100)
        throw validation_error("scan_stationary_surface_n3: resolution must be >= 100");
    auto eval_window = [](double u0, double u1, double v0, double v1, int steps,
                          scan_result& best) {
        for (int a = 1; a < steps; ++a)
            for (int b = 1; b < steps; ++b) {
                const double u = u0 + (u1 - u0) * a / steps;
                const double v = v0 + (v1 - v0) * b / steps;
                const double p = stationary_probability_n3(u, v);
                if (p > best.value) best = {u, v, p};
            }
    };
    scan_result best{0.5, 0.5, stationary_probability_n3(0.5, 0.5)};
    eval_window(0.0, 1.0, 0.0, 1.0, resolution, best);
    double du = 2.0 / resolution, dv = 2.0 / resolution;
    for (int round = 0; round < 40 && du > 1e-14; ++round) {
        const double u0 = std::max(0.0, best.u - du), u1 = std::min(1.0, best.u + du);
        const double v0 = std::max(0.0, best.v - dv), v1 = std::min(1.0, best.v + dv);
        eval_window(u0, u1, v0, v1, 16, best);
        du *= 0.25;
        dv *= 0.25;
    }
    return best;
}

} // namespace hardychain
