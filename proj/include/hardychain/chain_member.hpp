// chain_member.hpp
// The members of the chain of CH-Hardy inequalities. Every member is a signed
// sum of products of per-site factors drawn from {e, 1-e, e', 1-e'}; the four
// named kinds carry their index constraints, and a custom kind accepts an
// arbitrary measurable term list.

#pragma once

#include <algorithm>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "hardychain/assignment.hpp"
#include "hardychain/errors.hpp"

namespace hardychain {

enum class site_factor { e, e_bar, ep, ep_bar };

inline const char* factor_name(site_factor f) {
    switch (f) {
        case site_factor::e: return "e";
        case site_factor::e_bar: return "~e";
        case site_factor::ep: return "e'";
        case site_factor::ep_bar: return "~e'";
    }
    return "?";
}

// One signed product. Sites not listed are unconstrained (factor 1).
struct product_term {
    int sign = +1; // +1 or -1
    std::vector<std::pair<int, site_factor>> factors; // (site index 1..n, factor)
};

enum class member_kind { X, Xij, Xijk, Xijkl, Custom };

inline std::string member_kind_name(member_kind k) {
    switch (k) {
        case member_kind::X: return "X";
        case member_kind::Xij: return "Xij";
        case member_kind::Xijk: return "Xijk";
        case member_kind::Xijkl: return "Xijkl";
        case member_kind::Custom: return "Custom";
    }
    return "?";
}

class chain_member {
public:
    member_kind kind = member_kind::X;
    int n = 0;
    std::vector<int> indices;            // () / (i,j) / (i,j,k) / (i,j,k,l)
    std::vector<product_term> custom_terms;

    static chain_member make_X(int n) { return chain_member(member_kind::X, n, {}); }
    static chain_member make_Xij(int n, int i, int j) {
        return chain_member(member_kind::Xij, n, {i, j});
    }
    static chain_member make_Xijk(int n, int i, int j, int k) {
        return chain_member(member_kind::Xijk, n, {i, j, k});
    }
    static chain_member make_Xijkl(int n, int i, int j, int k, int l) {
        return chain_member(member_kind::Xijkl, n, {i, j, k, l});
    }
    static chain_member make_custom(int n, std::vector<product_term> terms) {
        chain_member m;
        m.kind = member_kind::Custom;
        m.n = n;
        m.custom_terms = std::move(terms);
        m.validate();
        return m;
    }

    chain_member() = default;

    void validate() const {
        if (n < 1) throw invalid_member_error("chain member: n must be >= 1");
        for (int idx : indices)
            if (idx < 1 || idx > n)
                throw invalid_member_error("chain member: index outside [1, n]");
        for (std::size_t a = 1; a < indices.size(); ++a)
            if (indices[a - 1] >= indices[a])
                throw invalid_member_error("chain member: indices must be strictly increasing");
        switch (kind) {
            case member_kind::X:
                if (!indices.empty()) throw invalid_member_error("X takes no indices");
                break;
            case member_kind::Xij:
                if (indices.size() != 2) throw invalid_member_error("Xij takes (i,j)");
                if (!(indices[1] < n) || n < 3)
                    throw invalid_member_error("Xij requires i < j < n and n >= 3");
                break;
            case member_kind::Xijk:
                if (indices.size() != 3) throw invalid_member_error("Xijk takes (i,j,k)");
                if (!(indices[2] < n) || n < 4)
                    throw invalid_member_error("Xijk requires i < j < k < n and n >= 4");
                break;
            case member_kind::Xijkl:
                if (indices.size() != 4) throw invalid_member_error("Xijkl takes (i,j,k,l)");
                if (!(indices[3] < n) || n < 5)
                    throw invalid_member_error("Xijkl requires i < j < k < l < n and n >= 5");
                break;
            case member_kind::Custom:
                if (!indices.empty())
                    throw invalid_member_error("custom members carry no index tuple");
                for (const auto& t : custom_terms) {
                    if (t.sign != 1 && t.sign != -1)
                        throw invalid_member_error("custom term sign must be +1 or -1");
                    std::vector<int> seen;
                    for (const auto& [site, f] : t.factors) {
                        (void)f;
                        if (site < 1 || site > n)
                            throw invalid_member_error("custom term site outside [1, n]");
                        if (std::find(seen.begin(), seen.end(), site) != seen.end())
                            throw invalid_member_error(
                                "custom term constrains a site twice; each site admits one "
                                "factor per term");
                        seen.push_back(site);
                    }
                }
                break;
        }
    }

    // Closed-form LHV upper bound for the named kinds; custom members have none.
    std::optional<int> closed_form_upper() const {
        switch (kind) {
            case member_kind::X: return n - 1;
            case member_kind::Xij: return n - 2;
            case member_kind::Xijk: return n - 2;
            case member_kind::Xijkl: return n - 3;
            case member_kind::Custom: return std::nullopt;
        }
        return std::nullopt;
    }

    // Expansion into the signed product terms that define the member. Every
    // named-kind term constrains each site exactly once, so each one is a
    // measurable n-fold coincidence.
    std::vector<product_term> terms() const {
        validate();
        if (kind == member_kind::Custom) return custom_terms;

        std::vector<product_term> out;
        out.push_back(all_sites(site_factor::e_bar, +1));
        out.push_back(all_sites(site_factor::ep, -1));
        switch (kind) {
            case member_kind::X:
                for (int i = 1; i <= n; ++i) out.push_back(single_e_term(i));
                break;
            case member_kind::Xij: {
                const int i = indices[0], j = indices[1];
                out.push_back(flip_term({i}, {j}));
                for (int l = 1; l <= n; ++l)
                    if (l != i) out.push_back(single_e_term(l));
                break;
            }
            case member_kind::Xijk: {
                const int i = indices[0], j = indices[1], k = indices[2];
                out.push_back(flip_term({i}, {j, k}));
                for (int l = 1; l <= n; ++l)
                    if (l != i) out.push_back(single_e_term(l));
                break;
            }
            case member_kind::Xijkl: {
                const int i = indices[0], j = indices[1];
                const int k = indices[2], l = indices[3];
                out.push_back(flip_term({i}, {j}));
                out.push_back(flip_term({k}, {l}));
                for (int p = 1; p <= n; ++p)
                    if (p != i && p != k) out.push_back(single_e_term(p));
                break;
            }
            default: break;
        }
        return out;
    }

    // Compact text form, e.g. "X@n=3", "Xij(1,2)@n=5".
    std::string to_string() const {
        std::ostringstream os;
        os << member_kind_name(kind);
        if (!indices.empty()) {
            os << '(';
            for (std::size_t a = 0; a < indices.size(); ++a) {
                if (a) os << ',';
                os << indices[a];
            }
            os << ')';
        }
        os << "@n=" << n;
        return os.str();
    }

    static chain_member parse(const std::string& text);

private:
    chain_member(member_kind k, int sites, std::vector<int> idx)
        : kind(k), n(sites), indices(std::move(idx)) {
        validate();
    }

    product_term all_sites(site_factor f, int sign) const {
        product_term t;
        t.sign = sign;
        for (int k = 1; k <= n; ++k) t.factors.emplace_back(k, f);
        return t;
    }

    // e_l * prod_{k != l} e'_k
    product_term single_e_term(int l) const {
        product_term t;
        t.sign = +1;
        for (int k = 1; k <= n; ++k)
            t.factors.emplace_back(k, k == l ? site_factor::e : site_factor::ep);
        return t;
    }

    // prod_{s in ones} e_s * prod_{s in zeros} (1-e_s) * prod_{other} e'_k
    product_term flip_term(const std::vector<int>& ones, const std::vector<int>& zeros) const {
        product_term t;
        t.sign = +1;
        for (int k = 1; k <= n; ++k) {
            if (std::find(ones.begin(), ones.end(), k) != ones.end())
                t.factors.emplace_back(k, site_factor::e);
            else if (std::find(zeros.begin(), zeros.end(), k) != zeros.end())
                t.factors.emplace_back(k, site_factor::e_bar);
            else
                t.factors.emplace_back(k, site_factor::ep);
        }
        return t;
    }
};

inline chain_member chain_member::parse(const std::string& text) {
    const auto at = text.find("@n=");
    if (at == std::string::npos)
        throw validation_error("chain member parse: missing '@n=' in '" + text + "'");
    int n = 0;
    try {
        n = std::stoi(text.substr(at + 3));
    } catch (const std::exception&) {
        throw validation_error("chain member parse: bad n in '" + text + "'");
    }
    std::string head = text.substr(0, at);
    std::vector<int> idx;
    const auto paren = head.find('(');
    if (paren != std::string::npos) {
        if (head.back() != ')')
            throw validation_error("chain member parse: unbalanced parentheses");
        std::string inside = head.substr(paren + 1, head.size() - paren - 2);
        std::istringstream is(inside);
        std::string piece;
        while (std::getline(is, piece, ','))
            idx.push_back(std::stoi(piece));
        head = head.substr(0, paren);
    }
    if (head == "X" && idx.empty()) return make_X(n);
    if (head == "Xij" && idx.size() == 2) return make_Xij(n, idx[0], idx[1]);
    if (head == "Xijk" && idx.size() == 3) return make_Xijk(n, idx[0], idx[1], idx[2]);
    if (head == "Xijkl" && idx.size() == 4)
        return make_Xijkl(n, idx[0], idx[1], idx[2], idx[3]);
    throw validation_error("chain member parse: unrecognized member '" + text + "'");
}

} // namespace hardychain
