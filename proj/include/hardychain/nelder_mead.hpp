// nelder_mead.hpp
// Derivative-free simplex minimizer. Deterministic given the starting point.

#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <vector>

namespace hardychain {

struct nelder_mead_options {
    int max_evaluations = 20000;
    double initial_step = 0.5;
    double f_tolerance = 1e-14;
    double x_tolerance = 1e-12;
};

struct nelder_mead_result {
    std::vector<double> x;
    double f = 0.0;
    int evaluations = 0;
};

inline nelder_mead_result nelder_mead(const std::function<double(const std::vector<double>&)>& f,
                                      std::vector<double> x0,
                                      const nelder_mead_options& opt = {}) {
    const std::size_t d = x0.size();
    std::vector<std::vector<double>> xs(d + 1, x0);
    for (std::size_t i = 0; i < d; ++i) xs[i + 1][i] += opt.initial_step;
    std::vector<double> fs(d + 1);
    int evals = 0;
    for (std::size_t i = 0; i <= d; ++i) {
        fs[i] = f(xs[i]);
        ++evals;
    }

    std::vector<std::size_t> order(d + 1);
    auto sort_simplex = [&] {
        std::iota(order.begin(), order.end(), std::size_t(0));
        std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
            return fs[a] < fs[b];
        });
    };
    auto centroid_excluding_worst = [&](std::vector<double>& c) {
        std::fill(c.begin(), c.end(), 0.0);
        for (std::size_t k = 0; k < d; ++k)
            for (std::size_t i = 0; i < d; ++i) c[i] += xs[order[k]][i];
        for (auto& v : c) v /= double(d);
    };

    std::vector<double> c(d), xr(d), xe(d), xc(d);
    while (evals < opt.max_evaluations) {
        sort_simplex();
        const std::size_t best = order[0], worst = order[d], second_worst = order[d - 1];
        if (std::abs(fs[worst] - fs[best]) < opt.f_tolerance) {
            double spread = 0.0;
            for (std::size_t i = 0; i < d; ++i)
                spread = std::max(spread, std::abs(xs[worst][i] - xs[best][i]));
            if (spread < opt.x_tolerance) break;
        }
        centroid_excluding_worst(c);
        for (std::size_t i = 0; i < d; ++i) xr[i] = c[i] + (c[i] - xs[worst][i]);
        const double fr = f(xr);
        ++evals;
        if (fr < fs[best]) {
            for (std::size_t i = 0; i < d; ++i) xe[i] = c[i] + 2.0 * (c[i] - xs[worst][i]);
            const double fe = f(xe);
            ++evals;
            if (fe < fr) {
                xs[worst] = xe;
                fs[worst] = fe;
            } else {
                xs[worst] = xr;
                fs[worst] = fr;
            }
        } else if (fr < fs[second_worst]) {
            xs[worst] = xr;
            fs[worst] = fr;
        } else {
            for (std::size_t i = 0; i < d; ++i) xc[i] = c[i] + 0.5 * (xs[worst][i] - c[i]);
            const double fc = f(xc);
            ++evals;
            if (fc < fs[worst]) {
                xs[worst] = xc;
                fs[worst] = fc;
            } else {
                for (std::size_t k = 1; k <= d; ++k) {
                    auto& xk = xs[order[k]];
                    for (std::size_t i = 0; i < d; ++i)
                        xk[i] = xs[best][i] + 0.5 * (xk[i] - xs[best][i]);
                    fs[order[k]] = f(xk);
                    ++evals;
                }
            }
        }
    }
    sort_simplex();
    return {xs[order[0]], fs[order[0]], evals};
}

} // namespace hardychain
