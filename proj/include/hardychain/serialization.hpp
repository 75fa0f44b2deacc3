// serialization.hpp
// JSON forms for states, operators, frames, and the report types, plus the
// numeric formatting rule shared by every output path: values are rounded to
// 9 significant digits before they are stored, so JSON and CSV emitted from
// the same run carry identical numbers and runs are byte-reproducible.

#pragma once

#include <cstdio>
#include <cstdlib>
#include <string>
#include <vector>

#include <json.hpp>

#include "hardychain/assignment.hpp"
#include "hardychain/bell_operators.hpp"
#include "hardychain/chain_member.hpp"
#include "hardychain/hardy.hpp"
#include "hardychain/lhv.hpp"
#include "hardychain/measurement.hpp"
#include "hardychain/optimize.hpp"
#include "hardychain/spectra.hpp"
#include "hardychain/state_vector.hpp"

namespace hardychain {

using json = nlohmann::ordered_json;

// Round-trips through "%.9g" so the stored double is exactly the printed one.
inline double round_sig9(double x) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.9g", x);
    return std::strtod(buf, nullptr);
}

inline std::string format_sig9(double x) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.9g", x);
    return buf;
}

inline json to_json(const state_vector& s) {
    json amps = json::array();
    for (const auto& a : s.amplitudes())
        amps.push_back({round_sig9(a.real()), round_sig9(a.imag())});
    return json{{"n", s.sites()}, {"amplitudes", std::move(amps)}};
}

inline state_vector state_from_json(const json& j) {
    const int n = j.at("n").get<int>();
    std::vector<cplx> amps;
    for (const auto& pair : j.at("amplitudes"))
        amps.emplace_back(pair.at(0).get<double>(), pair.at(1).get<double>());
    return state_vector(n, std::move(amps));
}

inline json to_json(const cmatrix& m) {
    json entries = json::array();
    for (int r = 0; r < m.dim(); ++r)
        for (int c = 0; c < m.dim(); ++c)
            entries.push_back({round_sig9(m(r, c).real()), round_sig9(m(r, c).imag())});
    return json{{"dim", m.dim()}, {"entries", std::move(entries)}};
}

inline cmatrix cmatrix_from_json(const json& j) {
    const int dim = j.at("dim").get<int>();
    std::vector<cplx> entries;
    for (const auto& pair : j.at("entries"))
        entries.emplace_back(pair.at(0).get<double>(), pair.at(1).get<double>());
    return cmatrix(dim, std::move(entries));
}

inline json to_json(const measurement_frame& f) {
    auto axes = [](const std::vector<bloch_axis>& v) {
        json out = json::array();
        for (const auto& a : v)
            out.push_back({round_sig9(a[0]), round_sig9(a[1]), round_sig9(a[2])});
        return out;
    };
    return json{{"n", f.n}, {"unprimed", axes(f.unprimed)}, {"primed", axes(f.primed)}};
}

inline measurement_frame frame_from_json(const json& j) {
    auto axes = [](const json& arr) {
        std::vector<bloch_axis> out;
        for (const auto& a : arr)
            out.push_back({a.at(0).get<double>(), a.at(1).get<double>(), a.at(2).get<double>()});
        return out;
    };
    return measurement_frame(axes(j.at("unprimed")), axes(j.at("primed")));
}

inline json bounds_report_json(const chain_member& m, const lhv_bounds& b) {
    return json{{"member", m.to_string()},
                {"min", b.min},
                {"max", b.max},
                {"min_witness", b.min_witness.to_string()},
                {"max_witness", b.max_witness.to_string()}};
}

inline json to_json(const hardy_report& r) {
    json zeros = json::array();
    for (const auto& [desc, p] : r.zero_terms)
        zeros.push_back({{"event", desc}, {"probability", round_sig9(p)}});
    return json{{"target", round_sig9(r.target)},
                {"zero_terms", std::move(zeros)},
                {"conclusion", round_sig9(r.conclusion)},
                {"premises_hold", r.premises_hold},
                {"lhv_violated", r.lhv_violated}};
}

inline json to_json(const optimization_result& r) {
    return json{{"best_value", round_sig9(r.best_value)},
                {"constraint_residual", round_sig9(r.constraint_residual)},
                {"evaluations", r.evaluations},
                {"winning_start", r.winning_start},
                {"feasible_starts", r.feasible_starts},
                {"state", to_json(r.state)},
                {"frame", to_json(r.frame)}};
}

inline json to_json(const spectrum_report& r) {
    json roots = json::array();
    for (double v : r.polynomial_roots) roots.push_back(round_sig9(v));
    json spectrum = json::array();
    for (double v : r.full_spectrum) spectrum.push_back(round_sig9(v));
    json matches = json::array();
    for (const auto& m : r.matches)
        matches.push_back({{"root", round_sig9(m.root)},
                           {"nearest_eigenvalue", round_sig9(m.nearest_eigenvalue)},
                           {"distance", round_sig9(m.distance)}});
    std::string name = member_kind_name(r.kind);
    if (!r.indices.empty()) {
        name += '(';
        for (std::size_t i = 0; i < r.indices.size(); ++i) {
            if (i) name += ',';
            name += std::to_string(r.indices[i]);
        }
        name += ')';
    }
    return json{{"n", r.n},
                {"member", name},
                {"polynomial_roots", std::move(roots)},
                {"full_spectrum", std::move(spectrum)},
                {"matches", std::move(matches)},
                {"lhv_bounds", {r.lhv_min, r.lhv_max}}};
}

} // namespace hardychain
