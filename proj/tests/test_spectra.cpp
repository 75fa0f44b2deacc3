#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "hardychain/bell_operators.hpp"
#include "hardychain/eigh.hpp"
#include "hardychain/polynomial_roots.hpp"
#include "hardychain/spectra.hpp"

using namespace hardychain;
using Catch::Matchers::WithinAbs;

namespace {

// Independent evaluation of the characteristic polynomials in their original
// factored forms, used as the oracle for root residuals.
double cubic_form(int n, double mu) {
    const double t = std::ldexp(1.0, -n);
    return 2.0 * mu * mu * mu - (n + 1) * mu * mu + mu * (2.0 * t - 2.0 + n) -
           (n * t + t - 1.0);
}

double quartic_form(int n, double mu) {
    const double t = std::ldexp(1.0, -n);
    const double brace1 = 4.0 * (mu - 1.0) * (2.0 * mu - n + 1.0) - 3.0 * (n - 2.0);
    const double brace2 = mu * (mu - 1.0) + t;
    return brace1 * brace2 + (4.0 * mu - 1.0) * (mu - 1.0) * (2.0 * mu - 1.0);
}

} // namespace

TEST_CASE("generic cubic and quartic root solvers") {
    SECTION("cubic with known roots") {
        // (x-1)(x-2)(x-5) = x^3 - 8x^2 + 17x - 10
        const auto r = cubic_real_roots(1.0, -8.0, 17.0, -10.0);
        CHECK_THAT(r[0], WithinAbs(1.0, 1e-12));
        CHECK_THAT(r[1], WithinAbs(2.0, 1e-12));
        CHECK_THAT(r[2], WithinAbs(5.0, 1e-12));
    }
    SECTION("cubic rejects complex pairs") {
        // x^3 + x + 1 has one real root and a complex pair
        CHECK_THROWS_AS(cubic_real_roots(1.0, 0.0, 1.0, 1.0), validation_error);
    }
    SECTION("quartic with known roots") {
        // (x+2)(x+1)(x-3)(x-4) = x^4 - 4x^3 - 7x^2 + 22x + 24
        const auto r = quartic_real_roots(1.0, -4.0, -7.0, 22.0, 24.0);
        CHECK_THAT(r[0], WithinAbs(-2.0, 1e-11));
        CHECK_THAT(r[1], WithinAbs(-1.0, 1e-11));
        CHECK_THAT(r[2], WithinAbs(3.0, 1e-11));
        CHECK_THAT(r[3], WithinAbs(4.0, 1e-11));
    }
}

TEST_CASE("cubic eigenvalues of X") {
    SECTION("n=2 exact closed forms") {
        const auto r = cubic_eigenvalues_X(2);
        const double s2 = std::sqrt(2.0);
        CHECK_THAT(r[0], WithinAbs((1.0 - s2) / 2.0, 1e-12));
        CHECK_THAT(r[1], WithinAbs(0.5, 1e-12));
        CHECK_THAT(r[2], WithinAbs((1.0 + s2) / 2.0, 1e-12));
    }
    SECTION("reference digits") {
        const auto r3 = cubic_eigenvalues_X(3);
        CHECK_THAT(r3[0], WithinAbs(-0.223046, 1e-4));
        CHECK_THAT(r3[1], WithinAbs(0.77294, 1e-4));
        CHECK_THAT(r3[2], WithinAbs(1.4501, 1e-4));
        const auto r6 = cubic_eigenvalues_X(6);
        CHECK_THAT(r6[0], WithinAbs(-0.1689639, 1e-4));
        CHECK_THAT(r6[1], WithinAbs(0.9802124, 1e-4));
        CHECK_THAT(r6[2], WithinAbs(2.688752, 1e-4));
    }
    SECTION("roots satisfy the original factored form") {
        for (int n = 2; n <= 10; ++n)
            for (double mu : cubic_eigenvalues_X(n))
                REQUIRE_THAT(cubic_form(n, mu), WithinAbs(0.0, 1e-12));
    }
}

TEST_CASE("quartic eigenvalues of Xij") {
    SECTION("n=3 exact closed forms") {
        const auto r = quartic_eigenvalues_Xij(3);
        const double h = std::sqrt(3.0) / 2.0;
        CHECK_THAT(r[0], WithinAbs((1.0 - std::sqrt(1.0 + h)) / 2.0, 1e-12));
        CHECK_THAT(r[1], WithinAbs((1.0 - std::sqrt(1.0 - h)) / 2.0, 1e-12));
        CHECK_THAT(r[2], WithinAbs((1.0 + std::sqrt(1.0 - h)) / 2.0, 1e-12));
        CHECK_THAT(r[3], WithinAbs((1.0 + std::sqrt(1.0 + h)) / 2.0, 1e-12));
    }
    SECTION("n=4 values frozen from the quartic, cross-checked against eigh") {
        const auto r = quartic_eigenvalues_Xij(4);
        CHECK_THAT(r[0], WithinAbs(-0.1870789, 1e-6));
        CHECK_THAT(r[1], WithinAbs(0.3186729, 1e-6));
        CHECK_THAT(r[2], WithinAbs(0.8810731, 1e-6));
        CHECK_THAT(r[3], WithinAbs(1.4873330, 1e-6));
    }
    SECTION("reference digits for the consistent rows") {
        const auto r5 = quartic_eigenvalues_Xij(5);
        CHECK_THAT(r5[0], WithinAbs(-0.1734191, 1e-4));
        CHECK_THAT(r5[1], WithinAbs(0.3092781, 1e-4));
        CHECK_THAT(r5[2], WithinAbs(0.9524242, 1e-4));
        CHECK_THAT(r5[3], WithinAbs(1.911717, 1e-4));
        const auto r6 = quartic_eigenvalues_Xij(6);
        CHECK_THAT(r6[0], WithinAbs(-0.156122, 1e-4));
        CHECK_THAT(r6[3], WithinAbs(2.37600, 1e-4));
    }
    SECTION("roots satisfy the original factored form") {
        for (int n = 3; n <= 10; ++n)
            for (double mu : quartic_eigenvalues_Xij(n))
                REQUIRE_THAT(quartic_form(n, mu), WithinAbs(0.0, 1e-12));
    }
}

TEST_CASE("polynomial roots live in the full operator spectra") {
    for (int n = 2; n <= 6; ++n) {
        const auto rep = make_spectrum_report(n, member_kind::X);
        REQUIRE(rep.max_match_distance() < 1e-8);
        CHECK(rep.lhv_max == n - 1);
        CHECK(rep.full_spectrum.size() == std::size_t(1) << n);
    }
    for (int n = 3; n <= 6; ++n) {
        const auto rep = make_spectrum_report(n, member_kind::Xij, {1, 2});
        REQUIRE(rep.max_match_distance() < 1e-8);
        CHECK(rep.lhv_max == n - 2);
    }
}

TEST_CASE("quartic roots are independent of the index pair") {
    for (int n : {4, 5}) {
        const auto roots = quartic_eigenvalues_Xij(n);
        for (int i = 1; i < n; ++i)
            for (int j = i + 1; j < n; ++j) {
                const auto spectrum = eigh(build_Xij_operator(n, i, j)).values;
                for (double r : roots) {
                    double best = 1e9;
                    for (double ev : spectrum) best = std::min(best, std::abs(ev - r));
                    REQUIRE(best < 1e-9);
                }
            }
    }
}

TEST_CASE("violation classification across n") {
    for (int n = 2; n <= 8; ++n) {
        const auto r = cubic_eigenvalues_X(n);
        CHECK(r.front() < 0.0);
        if (n == 2)
            CHECK(r.back() > 1.0);
        else
            CHECK(r.back() < double(n - 1));
    }
    for (int n = 3; n <= 8; ++n) {
        const auto r = quartic_eigenvalues_Xij(n);
        CHECK(r.front() < 0.0);
        if (n == 3)
            CHECK(r.back() > 1.0);
        else
            CHECK(r.back() < double(n - 2));
    }
}

TEST_CASE("X eigenstate formula") {
    SECTION("machine-precision residual for n=2 at the most negative root") {
        const double mu = (1.0 - std::sqrt(2.0)) / 2.0;
        const auto eta = eigenstate_X(2, mu);
        const auto op = build_X_operator(2);
        auto r = apply_operator(op, eta);
        r += cplx(-mu) * eta;
        CHECK(r.norm() < 1e-10);
    }
    SECTION("all roots, n = 2..6") {
        for (int n = 2; n <= 6; ++n) {
            const auto op = build_X_operator(n);
            for (double mu : cubic_eigenvalues_X(n)) {
                const auto eta = eigenstate_X(n, mu);
                CHECK(eta.is_normalized(1e-12));
                auto r = apply_operator(op, eta);
                r += cplx(-mu) * eta;
                REQUIRE(r.norm() < 1e-8);
            }
        }
    }
    SECTION("expectation reproduces the eigenvalue") {
        const double mu = cubic_eigenvalues_X(3)[0]; // about -0.223046
        CHECK_THAT(mu, WithinAbs(-0.223046, 1e-4));
        const auto eta = eigenstate_X(3, mu);
        CHECK_THAT(expectation(eta, build_X_operator(3)), WithinAbs(mu, 1e-8));
    }
    SECTION("singular denominator is rejected") {
        CHECK_THROWS_AS(eigenstate_X(3, 2.0), singularity_error); // 2*mu = n+1
    }
}
