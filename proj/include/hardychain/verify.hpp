// verify.hpp
// The invariant suite behind the `verify` command: each property runs at a
// configurable size and reports pass/fail with a witness string on failure.

#pragma once

#include <cmath>
#include <cstdint>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "hardychain/bell_operators.hpp"
#include "hardychain/chain_member.hpp"
#include "hardychain/eigh.hpp"
#include "hardychain/hardy.hpp"
#include "hardychain/lhv.hpp"
#include "hardychain/measurement.hpp"
#include "hardychain/spectra.hpp"
#include "hardychain/state_vector.hpp"

namespace hardychain {

struct property_result {
    std::string name;
    bool passed = false;
    std::string detail; // witness or summary
};

struct verify_options {
    int n_max = 6;
    int samples = 100;
    std::uint64_t seed = 1;
    std::string only; // empty = run everything
};

namespace verify_detail {

inline state_vector random_state(int n, std::mt19937_64& rng) {
    std::normal_distribution<double> dist(0.0, 1.0);
    state_vector s(n);
    for (std::size_t k = 0; k < s.dim(); ++k) s[k] = cplx(dist(rng), dist(rng));
    return s.normalized();
}

inline bloch_axis random_axis(std::mt19937_64& rng) {
    std::normal_distribution<double> dist(0.0, 1.0);
    bloch_axis a{dist(rng), dist(rng), dist(rng)};
    const double nrm = axis_norm(a);
    if (nrm < 1e-6) return axis_z;
    return {a[0] / nrm, a[1] / nrm, a[2] / nrm};
}

inline measurement_frame random_frame(int n, std::mt19937_64& rng) {
    std::vector<bloch_axis> u, p;
    for (int i = 0; i < n; ++i) {
        u.push_back(random_axis(rng));
        p.push_back(random_axis(rng));
    }
    return measurement_frame(std::move(u), std::move(p));
}

// every valid member of the four named kinds at size n, all index tuples
inline std::vector<chain_member> all_members(int n) {
    std::vector<chain_member> out;
    if (n >= 1) out.push_back(chain_member::make_X(n));
    for (int i = 1; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            if (n >= 3) out.push_back(chain_member::make_Xij(n, i, j));
            for (int k = j + 1; k < n; ++k) {
                if (n >= 4) out.push_back(chain_member::make_Xijk(n, i, j, k));
                for (int l = k + 1; l < n; ++l)
                    if (n >= 5) out.push_back(chain_member::make_Xijkl(n, i, j, k, l));
            }
        }
    return out;
}

// first valid members only (lowest index tuple), used where the full set
// would be redundant
inline std::vector<chain_member> lead_members(int n) {
    std::vector<chain_member> out;
    if (n >= 2) out.push_back(chain_member::make_X(n));
    if (n >= 3) out.push_back(chain_member::make_Xij(n, 1, 2));
    if (n >= 4) out.push_back(chain_member::make_Xijk(n, 1, 2, 3));
    if (n >= 5) out.push_back(chain_member::make_Xijkl(n, 1, 2, 3, 4));
    return out;
}

} // namespace verify_detail

inline std::vector<property_result> run_verification(const verify_options& opt) {
    namespace vd = verify_detail;
    std::vector<property_result> results;
    auto wants = [&](const std::string& name) { return opt.only.empty() || opt.only == name; };
    auto record = [&](const std::string& name, bool ok, const std::string& detail) {
        results.push_back({name, ok, detail});
    };

    if (wants("master-identity")) {
        bool ok = true;
        std::string detail;
        for (int n = 1; n <= opt.n_max && ok; ++n) {
            const auto r = master_identity_check(n);
            if (!r.holds) {
                ok = false;
                detail = "n=" + std::to_string(n) + " counterexample " +
                         r.counterexample->to_string();
            }
        }
        record("master-identity", ok, ok ? "n=1.." + std::to_string(opt.n_max) : detail);
    }

    if (wants("pointwise-chain")) {
        bool ok = true;
        std::string detail;
        const int cap = std::min(opt.n_max, 8);
        for (int n = 2; n <= cap && ok; ++n)
            for (const auto& m : vd::all_members(n)) {
                const auto r = pointwise_chain_check(m);
                if (!r.holds) {
                    ok = false;
                    detail = m.to_string() + " violated at " + r.violation->to_string();
                    break;
                }
            }
        record("pointwise-chain", ok,
               ok ? "all members, n<=" + std::to_string(cap) : detail);
    }

    if (wants("lhv-closed-form")) {
        bool ok = true;
        std::string detail;
        for (int n = 2; n <= opt.n_max && ok; ++n)
            for (const auto& m : vd::lead_members(n)) {
                const auto b = lhv_bounds_bruteforce(m);
                const int upper = *m.closed_form_upper();
                if (b.min != 0 || b.max != upper ||
                    eval_chain_member(m, b.min_witness) != b.min ||
                    eval_chain_member(m, b.max_witness) != b.max) {
                    ok = false;
                    detail = m.to_string() + " bounds (" + std::to_string(b.min) + "," +
                             std::to_string(b.max) + ") expected (0," +
                             std::to_string(upper) + ")";
                    break;
                }
            }
        record("lhv-closed-form", ok, ok ? "n<=" + std::to_string(opt.n_max) : detail);
    }

    if (wants("expectation-in-bounds")) {
        std::mt19937_64 rng(opt.seed);
        bool ok = true;
        std::string detail;
        const int n = std::min(opt.n_max, 6);
        for (const auto& m : vd::lead_members(n)) {
            if (!ok) break;
            const auto b = lhv_bounds_bruteforce(m);
            const std::size_t count = assignment_count(n);
            std::uniform_real_distribution<double> u(0.0, 1.0);
            for (int trial = 0; trial < opt.samples && ok; ++trial) {
                std::vector<double> w(count);
                double total = 0.0;
                for (auto& v : w) total += (v = u(rng));
                for (auto& v : w) v /= total;
                const double e = lhv_expectation(m, w);
                if (e < b.min - 1e-9 || e > b.max + 1e-9) {
                    ok = false;
                    detail = m.to_string() + " expectation " + std::to_string(e) +
                             " outside [" + std::to_string(b.min) + "," +
                             std::to_string(b.max) + "]";
                }
            }
        }
        record("expectation-in-bounds", ok,
               ok ? std::to_string(opt.samples) + " distributions per member" : detail);
    }

    if (wants("projector-completeness")) {
        std::mt19937_64 rng(opt.seed + 1);
        bool ok = true;
        std::string detail;
        for (int trial = 0; trial < opt.samples && ok; ++trial) {
            const auto a = vd::random_axis(rng);
            const cmatrix sum = projector(a, 0) + projector(a, 1);
            const cmatrix diff = sum - cmatrix::identity(2);
            if (diff.max_abs() > 1e-15) {
                ok = false;
                std::ostringstream os;
                os << "axis (" << a[0] << "," << a[1] << "," << a[2] << ") defect "
                   << diff.max_abs();
                detail = os.str();
            }
        }
        record("projector-completeness", ok,
               ok ? std::to_string(opt.samples) + " random axes" : detail);
    }

    if (wants("probability-normalization")) {
        std::mt19937_64 rng(opt.seed + 2);
        bool ok = true;
        std::string detail;
        for (int n = 1; n <= std::min(opt.n_max, 6) && ok; ++n) {
            const int trials = std::max(1, opt.samples / 10);
            for (int trial = 0; trial < trials && ok; ++trial) {
                const auto psi = vd::random_state(n, rng);
                const auto frame = vd::random_frame(n, rng);
                std::uniform_int_distribution<int> coin(0, 1);
                std::vector<setting> settings;
                for (int i = 0; i < n; ++i)
                    settings.push_back(coin(rng) ? setting::primed : setting::unprimed);
                double total = 0.0;
                for (std::size_t mask = 0; mask < (std::size_t(1) << n); ++mask) {
                    std::vector<site_constraint> cs(n);
                    for (int i = 0; i < n; ++i)
                        cs[i] = {settings[i], static_cast<int>((mask >> i) & 1)};
                    total += joint_probability(psi, frame, coincidence_event(n, cs));
                }
                if (std::abs(total - 1.0) > 1e-10) {
                    ok = false;
                    detail = "n=" + std::to_string(n) + " outcome sum " + std::to_string(total);
                }
            }
        }
        record("probability-normalization", ok, ok ? "random states and frames" : detail);
    }

    if (wants("eigh-reconstruction")) {
        std::mt19937_64 rng(opt.seed + 3);
        std::normal_distribution<double> dist(0.0, 1.0);
        bool ok = true;
        std::string detail;
        for (int dim : {2, 3, 5, 16, 64, 256}) {
            if (!ok) break;
            cmatrix a(dim);
            for (int r = 0; r < dim; ++r) {
                a(r, r) = dist(rng);
                for (int c = r + 1; c < dim; ++c) {
                    const cplx v(dist(rng), dist(rng));
                    a(r, c) = v;
                    a(c, r) = std::conj(v);
                }
            }
            const auto res = eigh(a);
            double worst = 0.0;
            for (int k = 0; k < dim; ++k) {
                const auto vk = res.vector(k);
                const auto av = a.apply(vk);
                double rnorm = 0.0;
                for (int r = 0; r < dim; ++r) rnorm += std::norm(av[r] - res.values[k] * vk[r]);
                worst = std::max(worst, std::sqrt(rnorm));
            }
            const cmatrix vt = res.vectors.adjoint() * res.vectors;
            const double unitary_defect = (vt - cmatrix::identity(dim)).max_abs();
            // A - V diag V^H, max entry
            cmatrix vl = res.vectors;
            for (int c = 0; c < dim; ++c)
                for (int r = 0; r < dim; ++r) vl(r, c) *= res.values[c];
            const double recon = (a - vl * res.vectors.adjoint()).max_abs();
            if (worst > 1e-9 || unitary_defect > 1e-9 || recon > 1e-8) {
                ok = false;
                std::ostringstream os;
                os << "dim " << dim << " residual " << worst << " unitary " << unitary_defect
                   << " reconstruction " << recon;
                detail = os.str();
            }
        }
        record("eigh-reconstruction", ok, ok ? "dims 2..256" : detail);
    }

    if (wants("op-prob-consistency")) {
        std::mt19937_64 rng(opt.seed + 4);
        bool ok = true;
        std::string detail;
        const int cap = std::min(opt.n_max, 5);
        for (int n = 2; n <= cap && ok; ++n) {
            const auto frame = measurement_frame::default_zx(n);
            for (const auto& m : vd::lead_members(n)) {
                if (!ok) break;
                const cmatrix op = member_operator(m, frame);
                for (int trial = 0; trial < opt.samples && ok; ++trial) {
                    const auto psi = vd::random_state(n, rng);
                    const double via_op = expectation(psi, op);
                    const double via_prob = member_probability_sum(m, psi, frame);
                    if (std::abs(via_op - via_prob) > 1e-10) {
                        ok = false;
                        std::ostringstream os;
                        os << m.to_string() << " operator " << via_op << " vs probabilities "
                           << via_prob;
                        detail = os.str();
                    }
                }
            }
        }
        record("op-prob-consistency", ok,
               ok ? std::to_string(opt.samples) + " states per member, n<=" +
                        std::to_string(cap)
                  : detail);
    }

    if (wants("polynomial-spectrum")) {
        bool ok = true;
        std::string detail;
        const int cap = std::min(opt.n_max, 8);
        for (int n = 2; n <= cap && ok; ++n) {
            const auto rep = make_spectrum_report(n, member_kind::X);
            if (rep.max_match_distance() > 1e-8) {
                ok = false;
                detail = "X n=" + std::to_string(n) + " distance " +
                         std::to_string(rep.max_match_distance());
            }
        }
        for (int n = 3; n <= cap && ok; ++n) {
            const auto rep = make_spectrum_report(n, member_kind::Xij, {1, 2});
            if (rep.max_match_distance() > 1e-8) {
                ok = false;
                detail = "Xij n=" + std::to_string(n) + " distance " +
                         std::to_string(rep.max_match_distance());
            }
        }
        record("polynomial-spectrum", ok, ok ? "n<=" + std::to_string(cap) : detail);
    }

    if (wants("invariant-subspace")) {
        bool ok = true;
        std::string detail;
        const int cap = std::min(opt.n_max, 6);
        for (int n = 2; n <= cap && ok; ++n) {
            const double r = verify_invariant_subspace(n, member_kind::X);
            if (r > 1e-10) {
                ok = false;
                detail = "X n=" + std::to_string(n) + " residual " + std::to_string(r);
            }
        }
        for (int n = 3; n <= cap && ok; ++n) {
            const double r = verify_invariant_subspace(n, member_kind::Xij, {1, 2});
            if (r > 1e-10) {
                ok = false;
                detail = "Xij n=" + std::to_string(n) + " residual " + std::to_string(r);
            }
        }
        record("invariant-subspace", ok, ok ? "n<=" + std::to_string(cap) : detail);
    }

    if (wants("violation-classification")) {
        bool ok = true;
        std::string detail;
        const int cap = std::min(std::max(opt.n_max, 3), 8);
        for (int n = 2; n <= cap && ok; ++n) {
            const auto r = cubic_eigenvalues_X(n);
            const bool lower_violated = r.front() < 0.0;
            const bool upper_violated = r.back() > double(n - 1);
            const bool expect_upper = (n == 2);
            if (!lower_violated || upper_violated != expect_upper) {
                ok = false;
                detail = "X n=" + std::to_string(n) + " roots do not match the expected "
                         "violation pattern";
            }
        }
        for (int n = 3; n <= cap && ok; ++n) {
            const auto r = quartic_eigenvalues_Xij(n);
            const bool lower_violated = r.front() < 0.0;
            const bool upper_violated = r.back() > double(n - 2);
            const bool expect_upper = (n == 3);
            if (!lower_violated || upper_violated != expect_upper) {
                ok = false;
                detail = "Xij n=" + std::to_string(n) + " roots do not match the expected "
                         "violation pattern";
            }
        }
        record("violation-classification", ok, ok ? "n<=" + std::to_string(cap) : detail);
    }

    if (wants("hardy-lhv-soundness")) {
        std::mt19937_64 rng(opt.seed + 5);
        bool ok = true;
        std::string detail;
        for (int n = 2; n <= std::min(opt.n_max, 6) && ok; ++n) {
            std::vector<hardy_variant> variants;
            variants.emplace_back(hardy_kind::standard, n);
            if (n >= 3) variants.emplace_back(hardy_kind::variant_i, n, std::vector<int>{1, 2});
            if (n >= 4)
                variants.emplace_back(hardy_kind::variant_ii, n, std::vector<int>{1, 2, 3});
            if (n >= 5)
                variants.emplace_back(hardy_kind::variant_iii, n,
                                      std::vector<int>{1, 2, 3, 4});
            for (const auto& variant : variants) {
                if (!ok) break;
                // indicator of an event on a deterministic assignment
                auto holds = [&](const coincidence_event& ev, const assignment& a) {
                    for (int i = 1; i <= n; ++i) {
                        const auto& c = ev.sites[i - 1];
                        const int bit = c.which == setting::primed ? a.ep(i) : a.e(i);
                        if (bit != c.outcome) return false;
                    }
                    return true;
                };
                const auto zeros = variant.zero_events();
                // support = assignments on which every premise indicator is 0
                std::vector<std::uint64_t> support;
                for (std::uint64_t w = 0; w < assignment_count(n); ++w) {
                    assignment a(n, w);
                    bool clean = true;
                    for (const auto& ev : zeros)
                        if (holds(ev, a)) {
                            clean = false;
                            break;
                        }
                    if (clean) support.push_back(w);
                }
                std::uniform_real_distribution<double> u(0.0, 1.0);
                const int trials = std::max(1, opt.samples / 10);
                for (int trial = 0; trial < trials && ok; ++trial) {
                    double target = 0.0, conclusion = 0.0, total = 0.0;
                    std::vector<double> weights(support.size());
                    for (auto& wgt : weights) total += (wgt = u(rng));
                    for (std::size_t k = 0; k < support.size(); ++k) {
                        assignment a(n, support[k]);
                        const double wgt = weights[k] / total;
                        if (holds(variant.target_event(), a)) target += wgt;
                        if (holds(variant.conclusion_event(), a)) conclusion += wgt;
                    }
                    if (conclusion < target - 1e-15) {
                        ok = false;
                        detail = hardy_kind_name(variant.kind) + " n=" + std::to_string(n) +
                                 ": conclusion " + std::to_string(conclusion) + " < target " +
                                 std::to_string(target);
                    }
                }
            }
        }
        record("hardy-lhv-soundness", ok, ok ? "vertex-supported distributions" : detail);
    }

    return results;
}

} // namespace hardychain
