// optimize.hpp
// Maximal quantum violation of a Hardy variant: penalty-method search over
// real state amplitudes and real per-site measurement rotations, with
// geometric penalty continuation and seeded multi-starts.

#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include "hardychain/errors.hpp"
#include "hardychain/hardy.hpp"
#include "hardychain/measurement.hpp"
#include "hardychain/nelder_mead.hpp"
#include "hardychain/state_vector.hpp"

namespace hardychain {

struct optimizer_config {
    int starts = 32;
    std::uint64_t seed = 1;
    int max_evaluations_per_stage = 6000;
    double penalty_initial = 1e2;
    double penalty_max = 1e8;
    double penalty_growth = 10.0;
    double residual_tolerance = 1e-6;
    bool complex_amplitudes = false; // opt-in exploration mode
};

struct optimization_result {
    double best_value = 0.0;
    state_vector state;
    measurement_frame frame;
    double constraint_residual = 0.0;
    long long evaluations = 0;
    int winning_start = -1;
    int feasible_starts = 0;
};

namespace detail {

struct hardy_objective {
    // Parameter layout: amplitude block (real, or re/im interleaved), then one
    // rotation angle per site; primed axis = (sin 2t, 0, cos 2t).
    const hardy_variant& variant;
    bool complex_amps;
    std::vector<coincidence_event> constraints;
    coincidence_event target;
    long long evaluations = 0;

    explicit hardy_objective(const hardy_variant& v, bool complex_mode)
        : variant(v),
          complex_amps(complex_mode),
          constraints(v.optimization_zero_events()),
          target(v.target_event()) {}

    int amp_params() const { return (complex_amps ? 2 : 1) << variant.n; }
    int dimension() const { return amp_params() + variant.n; }

    state_vector decode_state(const std::vector<double>& x) const {
        const std::size_t dim = std::size_t(1) << variant.n;
        state_vector s(variant.n);
        for (std::size_t k = 0; k < dim; ++k)
            s[k] = complex_amps ? cplx(x[2 * k], x[2 * k + 1]) : cplx(x[k], 0.0);
        return s;
    }

    measurement_frame decode_frame(const std::vector<double>& x) const {
        std::vector<bloch_axis> primed;
        primed.reserve(variant.n);
        for (int i = 0; i < variant.n; ++i) {
            const double t = x[amp_params() + i];
            primed.push_back(primed_axis_from_ab(std::cos(t), std::sin(t)));
        }
        return measurement_frame(std::vector<bloch_axis>(variant.n, axis_z),
                                 std::move(primed));
    }

    // target and constraint probabilities at a parameter point
    std::pair<double, std::vector<double>> probabilities(const std::vector<double>& x) {
        ++evaluations;
        state_vector raw = decode_state(x);
        const double nrm = raw.norm();
        if (nrm < 1e-9) return {0.0, std::vector<double>(constraints.size(), 1.0)};
        state_vector psi = raw.normalized();
        const measurement_frame frame = decode_frame(x);
        std::vector<double> cs;
        cs.reserve(constraints.size());
        for (const auto& ev : constraints) cs.push_back(joint_probability(psi, frame, ev));
        return {joint_probability(psi, frame, target), std::move(cs)};
    }

    double penalized(const std::vector<double>& x, double weight) {
        const auto [tgt, cs] = probabilities(x);
        double pen = 0.0;
        for (double c : cs) pen += c * c;
        return -tgt + weight * pen;
    }
};

} // namespace detail

// Maximizes P(e'_k = 1 for all k) subject to the variant's zero constraints
// and a vanishing conclusion probability, via penalty continuation around a
// simplex search, over `starts` independent seeded restarts. The best
// feasible start wins; ties break toward the lowest start index.
inline optimization_result maximize_violation(const hardy_variant& variant,
                                              const optimizer_config& cfg = {}) {
    variant.validate();
    if (variant.n > 6)
        throw resource_limit_error("maximize_violation: n capped at 6 for the optimizer");

    detail::hardy_objective obj(variant, cfg.complex_amplitudes);
    const int dim = obj.dimension();

    optimization_result best;
    best.constraint_residual = 1.0;
    double best_feasible_value = -1.0;
    double best_infeasible_residual = 1.0;

    for (int start = 0; start < cfg.starts; ++start) {
        std::mt19937_64 rng(cfg.seed * 0x9e3779b97f4a7c15ULL + start);
        std::normal_distribution<double> amp_dist(0.0, 1.0);
        std::uniform_real_distribution<double> angle_dist(0.1, 3.0415926);

        std::vector<double> x(dim);
        for (int k = 0; k < obj.amp_params(); ++k) x[k] = amp_dist(rng);
        for (int k = 0; k < variant.n; ++k) x[obj.amp_params() + k] = angle_dist(rng);

        double step = 0.5;
        for (double w = cfg.penalty_initial; w <= cfg.penalty_max * 1.0001;
             w *= cfg.penalty_growth) {
            nelder_mead_options opt;
            opt.max_evaluations = cfg.max_evaluations_per_stage;
            opt.initial_step = step;
            auto res = nelder_mead([&](const std::vector<double>& p) { return obj.penalized(p, w); },
                                   x, opt);
            x = res.x;
            step = std::max(0.02, step * 0.5);
        }
        // final polish rounds at the top weight with a shrinking simplex
        for (double polish_step : {0.02, 0.004, 0.0008}) {
            nelder_mead_options opt;
            opt.max_evaluations = cfg.max_evaluations_per_stage;
            opt.initial_step = polish_step;
            auto res = nelder_mead(
                [&](const std::vector<double>& p) { return obj.penalized(p, cfg.penalty_max); },
                x, opt);
            x = res.x;
        }

        const auto [tgt, cs] = obj.probabilities(x);
        double residual = 0.0;
        for (double c : cs) residual = std::max(residual, c);
        best_infeasible_residual = std::min(best_infeasible_residual, residual);

        if (residual <= cfg.residual_tolerance && tgt > best_feasible_value) {
            best_feasible_value = tgt;
            best.best_value = tgt;
            best.state = obj.decode_state(x).normalized();
            best.frame = obj.decode_frame(x);
            best.constraint_residual = residual;
            best.winning_start = start;
        }
        if (residual <= cfg.residual_tolerance) ++best.feasible_starts;
    }
    best.evaluations = obj.evaluations;
    if (best.winning_start < 0)
        throw convergence_error(
            "maximize_violation: no feasible point found; best residual " +
            std::to_string(best_infeasible_residual) + " over " +
            std::to_string(cfg.starts) + " starts");
    return best;
}

} // namespace hardychain
