// lhv.hpp
// Exact integer evaluation of chain members on deterministic assignments,
// exhaustive bounds over the LHV polytope vertices, and the master-identity
// check that generates the whole chain.

#pragma once

#include <cmath>
#include <cstdint>
#include <optional>
#include <vector>

#include "hardychain/assignment.hpp"
#include "hardychain/chain_member.hpp"
#include "hardychain/errors.hpp"

namespace hardychain {

inline constexpr int kDefaultEnumerationCap = 12;

inline int factor_value(const assignment& a, int site, site_factor f) {
    switch (f) {
        case site_factor::e: return a.e(site);
        case site_factor::e_bar: return a.e_bar(site);
        case site_factor::ep: return a.ep(site);
        case site_factor::ep_bar: return a.ep_bar(site);
    }
    return 0;
}

inline int eval_term(const product_term& t, const assignment& a) {
    int prod = 1;
    for (const auto& [site, f] : t.factors) {
        prod *= factor_value(a, site, f);
        if (prod == 0) break;
    }
    return t.sign * prod;
}

// Exact integer value of the member's expression at one assignment.
inline int eval_chain_member(const chain_member& m, const assignment& a) {
    m.validate();
    if (a.n != m.n) throw dimension_error("eval_chain_member: assignment/member n mismatch");
    int sum = 0;
    for (const auto& t : m.terms()) sum += eval_term(t, a);
    return sum;
}

struct lhv_bounds {
    int min = 0;
    int max = 0;
    assignment min_witness;
    assignment max_witness;
};

namespace detail {

// Scan a contiguous range of packed assignment words. Ranges partition the
// vertex set, so partial results reduce with min/max regardless of the split.
inline lhv_bounds scan_range(const std::vector<product_term>& terms, int n,
                             std::uint64_t begin, std::uint64_t end) {
    lhv_bounds b;
    bool first = true;
    for (std::uint64_t w = begin; w < end; ++w) {
        assignment a(n, w);
        int v = 0;
        for (const auto& t : terms) v += eval_term(t, a);
        if (first || v < b.min) {
            b.min = v;
            b.min_witness = a;
        }
        if (first || v > b.max) {
            b.max = v;
            b.max_witness = a;
        }
        first = false;
    }
    return b;
}

} // namespace detail

// Exhaustive min/max over all 2^{2n} assignments, with the lowest-word witness
// for each bound.
inline lhv_bounds lhv_bounds_bruteforce(const chain_member& m,
                                        int cap = kDefaultEnumerationCap) {
    m.validate();
    if (m.n > cap)
        throw resource_limit_error("lhv_bounds_bruteforce: n exceeds enumeration cap");
    return detail::scan_range(m.terms(), m.n, 0, assignment_count(m.n));
}

struct identity_check_result {
    bool holds = true;
    std::optional<assignment> counterexample;
};

// Verifies both halves of the master identity as exact integer statements:
//   prod ~e_k - prod e'_k = (1 - prod e'_k) prod ~e_k - (1 - prod ~e_k) prod e'_k
//   1 - prod ~e_k = e_n + sum_{i<n} e_i prod_{j>i} ~e_j
inline identity_check_result master_identity_check(int n,
                                                   int cap = kDefaultEnumerationCap) {
    if (n < 1) throw validation_error("master_identity_check: n must be >= 1");
    if (n > cap) throw resource_limit_error("master_identity_check: n exceeds cap");
    for (std::uint64_t w = 0; w < assignment_count(n); ++w) {
        assignment a(n, w);
        int prod_ebar = 1, prod_ep = 1;
        for (int k = 1; k <= n; ++k) {
            prod_ebar *= a.e_bar(k);
            prod_ep *= a.ep(k);
        }
        const int lhs = prod_ebar - prod_ep;
        const int rhs = (1 - prod_ep) * prod_ebar - (1 - prod_ebar) * prod_ep;
        int expand = a.e(n);
        for (int i = 1; i < n; ++i) {
            int term = a.e(i);
            for (int j = i + 1; j <= n; ++j) term *= a.e_bar(j);
            expand += term;
        }
        if (lhs != rhs || expand != 1 - prod_ebar) return {false, a};
    }
    return {true, std::nullopt};
}

struct pointwise_check_result {
    bool holds = true;
    std::optional<assignment> violation;
};

// Checks 0 <= value <= U at every vertex. Named kinds use their closed-form
// upper bound; custom members are held to the lower bound only.
inline pointwise_check_result pointwise_chain_check(const chain_member& m,
                                                    int cap = kDefaultEnumerationCap) {
    m.validate();
    if (m.n > cap) throw resource_limit_error("pointwise_chain_check: n exceeds cap");
    const auto upper = m.closed_form_upper();
    const auto terms = m.terms();
    for (std::uint64_t w = 0; w < assignment_count(m.n); ++w) {
        assignment a(m.n, w);
        int v = 0;
        for (const auto& t : terms) v += eval_term(t, a);
        if (v < 0 || (upper && v > *upper)) return {false, a};
    }
    return {true, std::nullopt};
}

// LHV expectation of a member under an explicit distribution over all
// assignments, indexed by packed word.
inline double lhv_expectation(const chain_member& m, const std::vector<double>& weights,
                              int cap = kDefaultEnumerationCap) {
    m.validate();
    if (m.n > cap) throw resource_limit_error("lhv_expectation: n exceeds cap");
    if (weights.size() != assignment_count(m.n))
        throw validation_error("lhv_expectation: weight vector must cover all assignments");
    double total = 0.0;
    for (double w : weights) {
        if (w < 0.0) throw validation_error("lhv_expectation: negative weight");
        total += w;
    }
    if (std::abs(total - 1.0) > 1e-12)
        throw validation_error("lhv_expectation: weights must sum to 1 within 1e-12");
    const auto terms = m.terms();
    double acc = 0.0;
    for (std::uint64_t w = 0; w < assignment_count(m.n); ++w) {
        if (weights[w] == 0.0) continue;
        assignment a(m.n, w);
        int v = 0;
        for (const auto& t : terms) v += eval_term(t, a);
        acc += weights[w] * v;
    }
    return acc;
}

} // namespace hardychain
