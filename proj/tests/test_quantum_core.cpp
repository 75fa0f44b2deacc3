#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include "hardychain/complex_matrix.hpp"
#include "hardychain/eigh.hpp"
#include "hardychain/measurement.hpp"
#include "hardychain/state_vector.hpp"

using namespace hardychain;
using Catch::Matchers::WithinAbs;

namespace {

state_vector random_state(int n, std::mt19937_64& rng) {
    std::normal_distribution<double> dist(0.0, 1.0);
    state_vector s(n);
    for (std::size_t k = 0; k < s.dim(); ++k) s[k] = cplx(dist(rng), dist(rng));
    return s.normalized();
}

bloch_axis random_axis(std::mt19937_64& rng) {
    std::normal_distribution<double> dist(0.0, 1.0);
    bloch_axis a{dist(rng), dist(rng), dist(rng)};
    const double nrm = axis_norm(a);
    return {a[0] / nrm, a[1] / nrm, a[2] / nrm};
}

} // namespace

TEST_CASE("projector fixed forms") {
    const auto pz1 = projector(axis_z, 1);
    CHECK_THAT(pz1(0, 0).real(), WithinAbs(1.0, 0.0));
    CHECK_THAT(pz1(1, 1).real(), WithinAbs(0.0, 0.0));
    CHECK(std::abs(pz1(0, 1)) == 0.0);

    const auto px1 = projector(axis_x, 1);
    for (int r = 0; r < 2; ++r)
        for (int c = 0; c < 2; ++c) CHECK_THAT(px1(r, c).real(), WithinAbs(0.5, 1e-15));

    CHECK_THROWS_AS(projector({0.5, 0.0, 0.0}, 1), validation_error);
    CHECK_THROWS_AS(projector(axis_z, 2), validation_error);
}

TEST_CASE("projector properties on random axes") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 50; ++trial) {
        const auto a = random_axis(rng);
        const auto p0 = projector(a, 0);
        const auto p1 = projector(a, 1);
        CHECK((p0 + p1 - cmatrix::identity(2)).max_abs() < 1e-15); // completeness
        CHECK((p1 * p1 - p1).max_abs() < 1e-15);                   // idempotent
        CHECK_THAT(p1.trace().real(), WithinAbs(1.0, 1e-14));      // rank 1
        CHECK(p1.hermiticity_defect() < 1e-15);
    }
}

TEST_CASE("product states and single-site application") {
    const std::array<cplx, 2> z_minus{0.0, 1.0};
    const auto phi = product_state({z_minus, z_minus, z_minus});
    CHECK_THAT(std::abs(phi[7]), WithinAbs(1.0, 1e-15)); // site 1 = MSB, all |1>
    CHECK(phi.is_normalized());

    // flipping site 1 moves amplitude across the top bit
    cmatrix flip(2);
    flip(0, 1) = 1.0;
    flip(1, 0) = 1.0;
    const auto flipped = apply_single_site(phi, 1, flip);
    CHECK_THAT(std::abs(flipped[3]), WithinAbs(1.0, 1e-15));
}

TEST_CASE("joint probability basics") {
    const int n = 3;
    const auto frame = measurement_frame::default_zx(n);
    const std::array<cplx, 2> z_minus{0.0, 1.0};
    const auto phi = product_state(std::vector<std::array<cplx, 2>>(n, z_minus));

    // eigenstate: all unprimed outcomes 0 with probability 1
    CHECK_THAT(joint_probability(phi, frame,
                                 coincidence_event::uniform(n, setting::unprimed, 0)),
               WithinAbs(1.0, 1e-14));
    // all primed = 1 picks up |<x+|z->|^2 per site
    CHECK_THAT(joint_probability(phi, frame,
                                 coincidence_event::uniform(n, setting::primed, 1)),
               WithinAbs(0.125, 1e-14));

    state_vector unnormalized(n);
    unnormalized[0] = 2.0;
    CHECK_THROWS_AS(joint_probability(unnormalized, frame,
                                      coincidence_event::uniform(n, setting::primed, 1)),
                    validation_error);
}

TEST_CASE("joint probabilities over all outcomes sum to one") {
    std::mt19937_64 rng(23);
    for (int n = 1; n <= 6; ++n) {
        for (int trial = 0; trial < 20; ++trial) {
            const auto psi = random_state(n, rng);
            std::vector<bloch_axis> u, p;
            for (int i = 0; i < n; ++i) {
                u.push_back(random_axis(rng));
                p.push_back(random_axis(rng));
            }
            const measurement_frame frame(std::move(u), std::move(p));
            std::uniform_int_distribution<int> coin(0, 1);
            std::vector<setting> settings;
            for (int i = 0; i < n; ++i)
                settings.push_back(coin(rng) ? setting::primed : setting::unprimed);
            double total = 0.0;
            for (std::size_t mask = 0; mask < (std::size_t(1) << n); ++mask) {
                std::vector<site_constraint> cs(n);
                for (int i = 0; i < n; ++i)
                    cs[i] = {settings[i], static_cast<int>((mask >> i) & 1)};
                total += joint_probability(psi, frame, coincidence_event(n, cs));
            }
            REQUIRE_THAT(total, WithinAbs(1.0, 1e-10));
        }
    }
}

TEST_CASE("joint probability equals the tensor-operator matrix element") {
    // the two routes share no code: one applies 2x2 projectors site by site,
    // the other assembles the full Kronecker product
    std::mt19937_64 rng(37);
    for (int n = 1; n <= 5; ++n) {
        for (int trial = 0; trial < 20; ++trial) {
            const auto psi = random_state(n, rng);
            std::vector<bloch_axis> u, p;
            for (int i = 0; i < n; ++i) {
                u.push_back(random_axis(rng));
                p.push_back(random_axis(rng));
            }
            const measurement_frame frame(std::move(u), std::move(p));
            std::uniform_int_distribution<int> coin(0, 1);
            std::vector<site_constraint> cs(n);
            std::vector<cmatrix> factors;
            for (int i = 1; i <= n; ++i) {
                cs[i - 1] = {coin(rng) ? setting::primed : setting::unprimed, coin(rng)};
                factors.push_back(projector(
                    frame.axis_for(i, cs[i - 1].which == setting::primed), cs[i - 1].outcome));
            }
            const double direct = joint_probability(psi, frame, coincidence_event(n, cs));
            const double via_tensor = expectation(psi, tensor(factors));
            REQUIRE_THAT(direct, WithinAbs(via_tensor, 1e-12));
        }
    }
}

TEST_CASE("expectation basics") {
    std::mt19937_64 rng(41);
    const auto psi = random_state(3, rng);
    CHECK_THAT(expectation(psi, cmatrix::identity(8)), WithinAbs(1.0, 1e-12));

    cmatrix diag(4);
    diag(0, 0) = 2.0;
    diag(1, 1) = -1.0;
    diag(2, 2) = 0.5;
    diag(3, 3) = 7.0;
    const auto e1 = state_vector::basis(2, 1);
    CHECK_THAT(expectation(e1, diag), WithinAbs(-1.0, 1e-14));

    CHECK_THROWS_AS(expectation(psi, cmatrix::identity(4)), dimension_error);
}

TEST_CASE("tensor products") {
    const auto i4 = tensor({cmatrix::identity(2), cmatrix::identity(2)});
    CHECK((i4 - cmatrix::identity(4)).max_abs() == 0.0);

    cmatrix d(2);
    d(0, 0) = 1.0;
    const auto dd = tensor({d, d});
    CHECK_THAT(dd(0, 0).real(), WithinAbs(1.0, 0.0));
    for (int k = 1; k < 4; ++k) CHECK(std::abs(dd(k, k)) == 0.0);

    const auto zp = projector(axis_z, 1);
    const auto xp = projector(axis_x, 1);
    CHECK_THAT(tensor({zp, xp}).trace().real(), WithinAbs(1.0, 1e-14));

    CHECK_THROWS_AS(tensor({}), validation_error);
}

TEST_CASE("eigh on fixed matrices") {
    cmatrix d(3);
    d(0, 0) = 3.0;
    d(1, 1) = 1.0;
    d(2, 2) = 2.0;
    const auto r = eigh(d);
    CHECK_THAT(r.values[0], WithinAbs(1.0, 1e-12));
    CHECK_THAT(r.values[1], WithinAbs(2.0, 1e-12));
    CHECK_THAT(r.values[2], WithinAbs(3.0, 1e-12));

    const auto px = projector(axis_x, 1);
    const auto rx = eigh(px);
    CHECK_THAT(rx.values[0], WithinAbs(0.0, 1e-12));
    CHECK_THAT(rx.values[1], WithinAbs(1.0, 1e-12));

    cmatrix non_hermitian(2);
    non_hermitian(0, 1) = 1.0;
    CHECK_THROWS_AS(eigh(non_hermitian), validation_error);
}

TEST_CASE("eigh reconstructs random Hermitian matrices") {
    std::mt19937_64 rng(53);
    std::normal_distribution<double> dist(0.0, 1.0);
    for (int dim : {2, 3, 5, 16, 64, 256}) {
        cmatrix a(dim);
        for (int r = 0; r < dim; ++r) {
            a(r, r) = dist(rng);
            for (int c = r + 1; c < dim; ++c) {
                const cplx v(dist(rng), dist(rng));
                a(r, c) = v;
                a(c, r) = std::conj(v);
            }
        }
        const auto res = eigh(a);
        for (int k = 1; k < dim; ++k) REQUIRE(res.values[k - 1] <= res.values[k]);
        // per-pair residual
        double worst = 0.0;
        for (int k = 0; k < dim; ++k) {
            const auto vk = res.vector(k);
            const auto av = a.apply(vk);
            double rnorm = 0.0;
            for (int r = 0; r < dim; ++r) rnorm += std::norm(av[r] - res.values[k] * vk[r]);
            worst = std::max(worst, std::sqrt(rnorm));
        }
        REQUIRE(worst < 1e-9);
        REQUIRE((res.vectors.adjoint() * res.vectors - cmatrix::identity(dim)).max_abs() <
                1e-9);
        cmatrix scaled = res.vectors;
        for (int c = 0; c < dim; ++c)
            for (int r = 0; r < dim; ++r) scaled(r, c) *= res.values[c];
        REQUIRE((a - scaled * res.vectors.adjoint()).max_abs() < 1e-8);
    }
}

