// polynomial_roots.hpp
// Real-root solvers for the low-degree characteristic polynomials that appear
// here: a trigonometric cubic solver and a quartic solver that brackets roots
// between the critical points of the derivative. Both polish with Newton.

#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <vector>

#include "hardychain/errors.hpp"

namespace hardychain {

namespace detail {

template <std::size_t N>
double poly_eval(const std::array<double, N>& c, double x) {
    // c[0] x^{N-1} + ... + c[N-1]
    double v = 0.0;
    for (double ck : c) v = v * x + ck;
    return v;
}

template <std::size_t N>
double poly_deriv(const std::array<double, N>& c, double x) {
    double v = 0.0;
    for (std::size_t k = 0; k + 1 < N; ++k) v = v * x + c[k] * double(N - 1 - k);
    return v;
}

template <std::size_t N>
double newton_polish(const std::array<double, N>& c, double x, int iters = 40) {
    for (int it = 0; it < iters; ++it) {
        const double f = poly_eval(c, x);
        const double df = poly_deriv(c, x);
        if (df == 0.0) break;
        const double step = f / df;
        x -= step;
        if (std::abs(step) < 1e-16 * std::max(1.0, std::abs(x))) break;
    }
    return x;
}

template <std::size_t N>
double bisect_root(const std::array<double, N>& c, double lo, double hi) {
    double flo = poly_eval(c, lo);
    for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        const double fm = poly_eval(c, mid);
        if (fm == 0.0) return mid;
        if ((flo < 0.0) != (fm < 0.0))
            hi = mid;
        else {
            lo = mid;
            flo = fm;
        }
        if (hi - lo < 1e-15 * std::max(1.0, std::abs(lo))) break;
    }
    return 0.5 * (lo + hi);
}

} // namespace detail

// All three roots of a cubic with real coefficients and three real roots,
// ascending. a3 must be nonzero.
inline std::array<double, 3> cubic_real_roots(double a3, double a2, double a1, double a0) {
    if (a3 == 0.0) throw validation_error("cubic_real_roots: leading coefficient is zero");
    const double b = a2 / a3, c = a1 / a3, d = a0 / a3;
    // depressed form t^3 + p t + q with x = t - b/3
    const double p = c - b * b / 3.0;
    const double q = 2.0 * b * b * b / 27.0 - b * c / 3.0 + d;
    std::array<double, 3> roots{};
    if (p >= -1e-30) {
        // only reachable for (near-)triple roots; genuinely complex pairs
        // are rejected below via the discriminant
        const double disc = -4.0 * p * p * p - 27.0 * q * q;
        if (disc < -1e-9 * std::max(1.0, p * p * p * p))
            throw validation_error("cubic_real_roots: roots are not all real");
        const double t = std::cbrt(-q);
        roots = {t, t, t};
    } else {
        const double disc = -4.0 * p * p * p - 27.0 * q * q;
        if (disc < -1e-9 * std::max(1.0, p * p * p * p))
            throw validation_error("cubic_real_roots: roots are not all real");
        const double r = 2.0 * std::sqrt(-p / 3.0);
        double arg = 3.0 * q / (p * r);
        arg = std::clamp(arg, -1.0, 1.0);
        const double theta = std::acos(arg) / 3.0;
        constexpr double kTwoPiOver3 = 2.0943951023931953;
        for (int k = 0; k < 3; ++k) roots[k] = r * std::cos(theta - kTwoPiOver3 * k);
    }
    const std::array<double, 4> mono{1.0, b, c, d};
    for (auto& t : roots) t = detail::newton_polish(mono, t - b / 3.0);
    std::sort(roots.begin(), roots.end());
    return roots;
}

// All four roots of a quartic with real coefficients and four real roots,
// ascending. Brackets each root between consecutive critical points of the
// derivative (a cubic), then bisects and Newton-polishes.
inline std::array<double, 4> quartic_real_roots(double a4, double a3, double a2, double a1,
                                                double a0) {
    if (a4 == 0.0) throw validation_error("quartic_real_roots: leading coefficient is zero");
    const std::array<double, 5> c{1.0, a3 / a4, a2 / a4, a1 / a4, a0 / a4};
    const auto crit = cubic_real_roots(4.0, 3.0 * c[1], 2.0 * c[2], c[3]);

    double bound = 1.0;
    for (int k = 1; k < 5; ++k) bound = std::max(bound, std::abs(c[k]));
    bound = 1.0 + bound; // Cauchy bound on root magnitude

    const std::array<double, 5> edges{-bound, crit[0], crit[1], crit[2], bound};
    std::array<double, 4> roots{};
    int found = 0;
    for (int k = 0; k < 4; ++k) {
        double lo = edges[k], hi = edges[k + 1];
        if (!(lo < hi)) continue;
        const double flo = detail::poly_eval(c, lo);
        const double fhi = detail::poly_eval(c, hi);
        if ((flo < 0.0) == (fhi < 0.0)) continue; // double root at an edge
        roots[found++] = detail::newton_polish(c, detail::bisect_root(c, lo, hi));
    }
    if (found < 4) {
        // repeated roots sit at derivative critical points
        for (double t : crit) {
            if (found >= 4) break;
            if (std::abs(detail::poly_eval(c, t)) <
                1e-10 * std::max(1.0, std::pow(bound, 4)))
                roots[found++] = t;
        }
    }
    if (found != 4)
        throw validation_error("quartic_real_roots: could not isolate four real roots");
    std::sort(roots.begin(), roots.end());
    return roots;
}

} // namespace hardychain
