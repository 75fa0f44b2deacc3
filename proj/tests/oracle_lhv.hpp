// oracle_lhv.hpp
// Test-only reference evaluators for the chain members, written directly from
// the defining expressions with plain loops. These stay independent of the
// library's term-list expansion so the two can check each other.

#pragma once

#include <cstdint>
#include <vector>

namespace oracle {

struct bits {
    std::vector<int> e, ep; // 0-based storage for sites 1..n
};

inline bits unpack(int n, std::uint64_t word) {
    bits b;
    b.e.resize(n);
    b.ep.resize(n);
    for (int i = 0; i < n; ++i) {
        b.e[i] = static_cast<int>((word >> i) & 1);
        b.ep[i] = static_cast<int>((word >> (n + i)) & 1);
    }
    return b;
}

inline int eval_X(int n, const bits& b) {
    int t1 = 1, t2 = 1, t3 = 0;
    for (int k = 0; k < n; ++k) t1 *= 1 - b.e[k];
    for (int k = 0; k < n; ++k) t2 *= b.ep[k];
    for (int i = 0; i < n; ++i) {
        int p = b.e[i];
        for (int k = 0; k < n; ++k)
            if (k != i) p *= b.ep[k];
        t3 += p;
    }
    return t1 - t2 + t3;
}

inline int eval_Xij(int n, int i, int j, const bits& b) { // i, j 1-based
    int t1 = 1, t2 = 1;
    for (int k = 0; k < n; ++k) t1 *= 1 - b.e[k];
    for (int k = 0; k < n; ++k) t2 *= b.ep[k];
    int t3 = b.e[i - 1] * (1 - b.e[j - 1]);
    for (int k = 0; k < n; ++k)
        if (k != i - 1 && k != j - 1) t3 *= b.ep[k];
    int t4 = 0;
    for (int l = 0; l < n; ++l) {
        if (l == i - 1) continue;
        int p = b.e[l];
        for (int k = 0; k < n; ++k)
            if (k != l) p *= b.ep[k];
        t4 += p;
    }
    return t1 - t2 + t3 + t4;
}

inline int eval_Xijk(int n, int i, int j, int k, const bits& b) {
    int t1 = 1, t2 = 1;
    for (int m = 0; m < n; ++m) t1 *= 1 - b.e[m];
    for (int m = 0; m < n; ++m) t2 *= b.ep[m];
    int t3 = b.e[i - 1] * (1 - b.e[j - 1]) * (1 - b.e[k - 1]);
    for (int m = 0; m < n; ++m)
        if (m != i - 1 && m != j - 1 && m != k - 1) t3 *= b.ep[m];
    int t4 = 0;
    for (int l = 0; l < n; ++l) {
        if (l == i - 1) continue;
        int p = b.e[l];
        for (int m = 0; m < n; ++m)
            if (m != l) p *= b.ep[m];
        t4 += p;
    }
    return t1 - t2 + t3 + t4;
}

inline int eval_Xijkl(int n, int i, int j, int k, int l, const bits& b) {
    int t1 = 1, t2 = 1;
    for (int m = 0; m < n; ++m) t1 *= 1 - b.e[m];
    for (int m = 0; m < n; ++m) t2 *= b.ep[m];
    int t3 = b.e[i - 1] * (1 - b.e[j - 1]);
    for (int m = 0; m < n; ++m)
        if (m != i - 1 && m != j - 1) t3 *= b.ep[m];
    int t4 = b.e[k - 1] * (1 - b.e[l - 1]);
    for (int m = 0; m < n; ++m)
        if (m != k - 1 && m != l - 1) t4 *= b.ep[m];
    int t5 = 0;
    for (int p = 0; p < n; ++p) {
        if (p == i - 1 || p == k - 1) continue;
        int q = b.e[p];
        for (int m = 0; m < n; ++m)
            if (m != p) q *= b.ep[m];
        t5 += q;
    }
    return t1 - t2 + t3 + t4 + t5;
}

} // namespace oracle
