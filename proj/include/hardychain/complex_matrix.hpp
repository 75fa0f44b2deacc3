// complex_matrix.hpp
// Dense square complex matrices sized for few-qubit operators, plus the
// Kronecker product used to assemble multi-site observables.

#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include "hardychain/errors.hpp"

namespace hardychain {

using cplx = std::complex<double>;

class cmatrix {
public:
    cmatrix() = default;
    explicit cmatrix(int dim) : dim_(dim), a_(static_cast<std::size_t>(dim) * dim) {
        if (dim < 1) throw dimension_error("cmatrix: dimension must be >= 1");
    }
    cmatrix(int dim, std::vector<cplx> entries) : dim_(dim), a_(std::move(entries)) {
        if (dim < 1 || a_.size() != static_cast<std::size_t>(dim) * dim)
            throw dimension_error("cmatrix: entry count must equal dim*dim");
    }

    static cmatrix identity(int dim) {
        cmatrix m(dim);
        for (int i = 0; i < dim; ++i) m(i, i) = 1.0;
        return m;
    }

    int dim() const { return dim_; }
    cplx& operator()(int r, int c) { return a_[static_cast<std::size_t>(r) * dim_ + c]; }
    const cplx& operator()(int r, int c) const {
        return a_[static_cast<std::size_t>(r) * dim_ + c];
    }
    const std::vector<cplx>& entries() const { return a_; }

    cmatrix& operator+=(const cmatrix& o) {
        require_same_dim(o);
        for (std::size_t k = 0; k < a_.size(); ++k) a_[k] += o.a_[k];
        return *this;
    }
    cmatrix& operator-=(const cmatrix& o) {
        require_same_dim(o);
        for (std::size_t k = 0; k < a_.size(); ++k) a_[k] -= o.a_[k];
        return *this;
    }
    cmatrix& operator*=(cplx s) {
        for (auto& v : a_) v *= s;
        return *this;
    }

    friend cmatrix operator+(cmatrix a, const cmatrix& b) { return a += b; }
    friend cmatrix operator-(cmatrix a, const cmatrix& b) { return a -= b; }
    friend cmatrix operator*(cmatrix a, cplx s) { return a *= s; }
    friend cmatrix operator*(cplx s, cmatrix a) { return a *= s; }

    friend cmatrix operator*(const cmatrix& a, const cmatrix& b) {
        a.require_same_dim(b);
        const int d = a.dim_;
        cmatrix out(d);
        for (int i = 0; i < d; ++i)
            for (int k = 0; k < d; ++k) {
                const cplx aik = a(i, k);
                if (aik == cplx{}) continue;
                for (int j = 0; j < d; ++j) out(i, j) += aik * b(k, j);
            }
        return out;
    }

    cmatrix adjoint() const {
        cmatrix out(dim_);
        for (int r = 0; r < dim_; ++r)
            for (int c = 0; c < dim_; ++c) out(c, r) = std::conj((*this)(r, c));
        return out;
    }

    cplx trace() const {
        cplx t = 0.0;
        for (int i = 0; i < dim_; ++i) t += (*this)(i, i);
        return t;
    }

    double max_abs() const {
        double m = 0.0;
        for (const auto& v : a_) m = std::max(m, std::abs(v));
        return m;
    }

    // max |A - A^dagger| entry
    double hermiticity_defect() const {
        double m = 0.0;
        for (int r = 0; r < dim_; ++r)
            for (int c = r; c < dim_; ++c)
                m = std::max(m, std::abs((*this)(r, c) - std::conj((*this)(c, r))));
        return m;
    }
    bool is_hermitian(double tol = 1e-12) const { return hermiticity_defect() < tol; }

    std::vector<cplx> apply(const std::vector<cplx>& v) const {
        if (static_cast<int>(v.size()) != dim_)
            throw dimension_error("cmatrix::apply: vector length mismatch");
        std::vector<cplx> out(v.size());
        for (int r = 0; r < dim_; ++r) {
            cplx acc = 0.0;
            const cplx* row = &a_[static_cast<std::size_t>(r) * dim_];
            for (int c = 0; c < dim_; ++c) acc += row[c] * v[c];
            out[r] = acc;
        }
        return out;
    }

private:
    void require_same_dim(const cmatrix& o) const {
        if (dim_ != o.dim_) throw dimension_error("cmatrix: dimension mismatch");
    }

    int dim_ = 0;
    std::vector<cplx> a_;
};

inline cmatrix kron(const cmatrix& a, const cmatrix& b) {
    const int da = a.dim(), db = b.dim();
    cmatrix out(da * db);
    for (int ra = 0; ra < da; ++ra)
        for (int ca = 0; ca < da; ++ca) {
            const cplx v = a(ra, ca);
            if (v == cplx{}) continue;
            for (int rb = 0; rb < db; ++rb)
                for (int cb = 0; cb < db; ++cb)
                    out(ra * db + rb, ca * db + cb) = v * b(rb, cb);
        }
    return out;
}

// Kronecker product over an ordered factor list, site 1 leftmost (most
// significant block).
inline cmatrix tensor(const std::vector<cmatrix>& factors) {
    if (factors.empty()) throw validation_error("tensor: empty factor list");
    cmatrix out = factors.front();
    for (std::size_t k = 1; k < factors.size(); ++k) out = kron(out, factors[k]);
    return out;
}

} // namespace hardychain
