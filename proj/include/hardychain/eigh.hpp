// eigh.hpp
// Dense Hermitian eigensolver: cyclic Jacobi with complex plane rotations.
// Unconditionally stable at the dimensions used here (<= 4096).

#pragma once

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

#include "hardychain/complex_matrix.hpp"
#include "hardychain/errors.hpp"

namespace hardychain {

struct eigh_result {
    std::vector<double> values; // ascending
    cmatrix vectors;            // column k pairs with values[k]

    std::vector<cplx> vector(int k) const {
        std::vector<cplx> v(vectors.dim());
        for (int r = 0; r < vectors.dim(); ++r) v[r] = vectors(r, k);
        return v;
    }
};

namespace detail {

inline double off_diagonal_frobenius(const cmatrix& a) {
    double s = 0.0;
    for (int r = 0; r < a.dim(); ++r)
        for (int c = 0; c < a.dim(); ++c)
            if (r != c) s += std::norm(a(r, c));
    return std::sqrt(s);
}

inline double frobenius(const cmatrix& a) {
    double s = 0.0;
    for (const auto& v : a.entries()) s += std::norm(v);
    return std::sqrt(s);
}

} // namespace detail

inline eigh_result eigh(const cmatrix& input, double hermitian_tol = 1e-12) {
    if (input.dim() > 4096) throw resource_limit_error("eigh: dimension cap is 4096");
    if (input.hermiticity_defect() >= hermitian_tol)
        throw validation_error("eigh: matrix is not Hermitian within tolerance");

    const int d = input.dim();
    cmatrix a = input;
    cmatrix v = cmatrix::identity(d);

    const double norm_a = detail::frobenius(a);
    const double target = std::max(1e-300, 1e-13 * norm_a);

    const int max_sweeps = 100;
    int sweep = 0;
    while (detail::off_diagonal_frobenius(a) > target) {
        if (++sweep > max_sweeps)
            throw convergence_error("eigh: Jacobi failed to converge in 100 sweeps");
        for (int p = 0; p < d - 1; ++p) {
            for (int q = p + 1; q < d; ++q) {
                const cplx apq = a(p, q);
                const double m = std::abs(apq);
                if (m <= 1e-300) {
                    a(p, q) = a(q, p) = 0.0;
                    continue;
                }
                const cplx phase = apq / m;
                const double diff = a(p, p).real() - a(q, q).real();
                // small-magnitude root of  m t^2 - diff t - m = 0
                const double den = std::hypot(diff, 2.0 * m);
                const double t = diff >= 0.0 ? -2.0 * m / (diff + den) : 2.0 * m / (den - diff);
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;
                const cplx spq = s * phase;            // U(p,q)
                const cplx sqp = -s * std::conj(phase); // U(q,p)

                // A <- U^H A U, touching rows/cols p and q only
                for (int k = 0; k < d; ++k) {
                    const cplx akp = a(k, p), akq = a(k, q);
                    a(k, p) = c * akp + sqp * akq;
                    a(k, q) = spq * akp + c * akq;
                }
                for (int k = 0; k < d; ++k) {
                    const cplx apk = a(p, k), aqk = a(q, k);
                    a(p, k) = c * apk + std::conj(sqp) * aqk;
                    a(q, k) = std::conj(spq) * apk + c * aqk;
                }
                a(p, q) = a(q, p) = 0.0;
                a(p, p) = a(p, p).real();
                a(q, q) = a(q, q).real();

                for (int k = 0; k < d; ++k) {
                    const cplx vkp = v(k, p), vkq = v(k, q);
                    v(k, p) = c * vkp + sqp * vkq;
                    v(k, q) = spq * vkp + c * vkq;
                }
            }
        }
    }

    std::vector<int> order(d);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](int i, int j) { return a(i, i).real() < a(j, j).real(); });

    eigh_result out;
    out.values.resize(d);
    out.vectors = cmatrix(d);
    for (int k = 0; k < d; ++k) {
        out.values[k] = a(order[k], order[k]).real();
        for (int r = 0; r < d; ++r) out.vectors(r, k) = v(r, order[k]);
    }
    return out;
}

} // namespace hardychain
