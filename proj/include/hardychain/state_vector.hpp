// state_vector.hpp
// Pure n-qubit states. Site 1 owns the most significant bit of the amplitude
// index; the computational |0> is the sigma_z eigenvector with eigenvalue +1,
// so with a z-axis measurement the outcome "e = 1" lands on |0>.

#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <vector>

#include "hardychain/complex_matrix.hpp"
#include "hardychain/errors.hpp"

namespace hardychain {

class state_vector {
public:
    state_vector() = default;
    explicit state_vector(int n)
        : n_(n), amps_(std::size_t(1) << check_sites(n)) {}
    state_vector(int n, std::vector<cplx> amps) : n_(n), amps_(std::move(amps)) {
        check_sites(n);
        if (amps_.size() != (std::size_t(1) << n))
            throw dimension_error("state_vector: amplitude count must be 2^n");
    }

    static state_vector basis(int n, std::uint64_t index) {
        state_vector s(n);
        s.amps_.at(index) = 1.0;
        return s;
    }

    int sites() const { return n_; }
    std::size_t dim() const { return amps_.size(); }
    cplx& operator[](std::size_t i) { return amps_[i]; }
    const cplx& operator[](std::size_t i) const { return amps_[i]; }
    const std::vector<cplx>& amplitudes() const { return amps_; }
    std::vector<cplx>& amplitudes() { return amps_; }

    double norm() const {
        double s = 0.0;
        for (const auto& a : amps_) s += std::norm(a);
        return std::sqrt(s);
    }
    bool is_normalized(double tol = 1e-10) const { return std::abs(norm() - 1.0) < tol; }

    state_vector normalized() const {
        const double nrm = norm();
        if (nrm < 1e-300) throw validation_error("state_vector: cannot normalize zero vector");
        state_vector out = *this;
        for (auto& a : out.amps_) a /= nrm;
        return out;
    }

    state_vector& operator+=(const state_vector& o) {
        if (n_ != o.n_) throw dimension_error("state_vector: site count mismatch");
        for (std::size_t i = 0; i < amps_.size(); ++i) amps_[i] += o.amps_[i];
        return *this;
    }
    state_vector& operator*=(cplx s) {
        for (auto& a : amps_) a *= s;
        return *this;
    }
    friend state_vector operator+(state_vector a, const state_vector& b) { return a += b; }
    friend state_vector operator*(cplx s, state_vector a) { return a *= s; }

private:
    static int check_sites(int n) {
        if (n < 1) throw validation_error("state_vector: n must be >= 1");
        if (n > 24) throw resource_limit_error("state_vector: n too large");
        return n;
    }

    int n_ = 0;
    std::vector<cplx> amps_;
};

inline cplx inner(const state_vector& a, const state_vector& b) {
    if (a.sites() != b.sites()) throw dimension_error("inner: site count mismatch");
    cplx acc = 0.0;
    for (std::size_t i = 0; i < a.dim(); ++i) acc += std::conj(a[i]) * b[i];
    return acc;
}

// Tensor product of per-site single-qubit states, site 1 first.
inline state_vector product_state(const std::vector<std::array<cplx, 2>>& site_states) {
    if (site_states.empty()) throw validation_error("product_state: empty site list");
    const int n = static_cast<int>(site_states.size());
    state_vector out(n);
    for (std::size_t idx = 0; idx < out.dim(); ++idx) {
        cplx v = 1.0;
        for (int i = 1; i <= n; ++i) {
            const int bit = static_cast<int>((idx >> (n - i)) & 1);
            v *= site_states[i - 1][bit];
            if (v == cplx{}) break;
        }
        out[idx] = v;
    }
    return out;
}

// Applies a 2x2 operator to one site of the state (site index 1-based).
inline state_vector apply_single_site(const state_vector& s, int site, const cmatrix& m) {
    if (m.dim() != 2) throw dimension_error("apply_single_site: operator must be 2x2");
    if (site < 1 || site > s.sites())
        throw dimension_error("apply_single_site: site outside [1, n]");
    const std::size_t stride = std::size_t(1) << (s.sites() - site);
    state_vector out = s;
    for (std::size_t base = 0; base < s.dim(); ++base) {
        if (base & stride) continue; // visit each (0,1) pair once, via its 0 element
        const std::size_t i0 = base, i1 = base | stride;
        const cplx a0 = s[i0], a1 = s[i1];
        out[i0] = m(0, 0) * a0 + m(0, 1) * a1;
        out[i1] = m(1, 0) * a0 + m(1, 1) * a1;
    }
    return out;
}

inline state_vector apply_operator(const cmatrix& op, const state_vector& s) {
    if (static_cast<std::size_t>(op.dim()) != s.dim())
        throw dimension_error("apply_operator: dimension mismatch");
    return state_vector(s.sites(), op.apply(s.amplitudes()));
}

} // namespace hardychain
