// assignment.hpp
// Deterministic local-hidden-variable assignments: one classical bit e_i and
// one bit e'_i per site. An assignment is a vertex of the LHV polytope.

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hardychain/errors.hpp"

namespace hardychain {

// All 2n bits of one assignment packed into a single word: e_i sits at bit
// (i-1), e'_i at bit (n+i-1), with sites numbered 1..n. Enumerating words in
// ascending order therefore enumerates assignments deterministically, which
// is what the brute-force scans rely on for reproducible witnesses.
struct assignment {
    int n = 0;
    std::uint64_t word = 0;

    assignment() = default;
    assignment(int sites, std::uint64_t packed) : n(sites), word(packed) {
        if (n < 1) throw validation_error("assignment: n must be >= 1");
        if (n > 32) throw resource_limit_error("assignment: n > 32 not representable");
    }

    static assignment from_bits(const std::vector<int>& e, const std::vector<int>& ep) {
        if (e.size() != ep.size() || e.empty())
            throw validation_error("assignment: e and e' must have equal nonzero length");
        const int n = static_cast<int>(e.size());
        std::uint64_t w = 0;
        for (int i = 0; i < n; ++i) {
            if ((e[i] & ~1) || (ep[i] & ~1))
                throw validation_error("assignment: bits must be 0 or 1");
            w |= static_cast<std::uint64_t>(e[i]) << i;
            w |= static_cast<std::uint64_t>(ep[i]) << (n + i);
        }
        return assignment(n, w);
    }

    static assignment all_zeros(int n) { return assignment(n, 0); }
    static assignment all_ones(int n) {
        return assignment(n, (std::uint64_t(1) << (2 * n)) - 1);
    }

    // Site index i is 1-based throughout, matching the inequality subscripts.
    int e(int i) const { return static_cast<int>((word >> (i - 1)) & 1); }
    int ep(int i) const { return static_cast<int>((word >> (n + i - 1)) & 1); }
    int e_bar(int i) const { return 1 - e(i); }
    int ep_bar(int i) const { return 1 - ep(i); }

    // Text form "e=010|e'=110", site 1 leftmost.
    std::string to_string() const {
        std::string s = "e=";
        for (int i = 1; i <= n; ++i) s += char('0' + e(i));
        s += "|e'=";
        for (int i = 1; i <= n; ++i) s += char('0' + ep(i));
        return s;
    }

    friend bool operator==(const assignment& a, const assignment& b) {
        return a.n == b.n && a.word == b.word;
    }
};

inline std::uint64_t assignment_count(int n) { return std::uint64_t(1) << (2 * n); }

} // namespace hardychain
