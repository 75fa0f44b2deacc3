#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "hardychain/assignment.hpp"
#include "hardychain/chain_member.hpp"
#include "hardychain/lhv.hpp"
#include "oracle_lhv.hpp"

using namespace hardychain;

TEST_CASE("assignment packing and text form") {
    const auto a = assignment::from_bits({0, 1, 0}, {1, 1, 0});
    CHECK(a.e(1) == 0);
    CHECK(a.e(2) == 1);
    CHECK(a.ep(1) == 1);
    CHECK(a.ep(3) == 0);
    CHECK(a.to_string() == "e=010|e'=110");
    CHECK(assignment::all_ones(2).to_string() == "e=11|e'=11");
    CHECK_THROWS_AS(assignment::from_bits({0, 2}, {0, 0}), validation_error);
}

TEST_CASE("chain member validation") {
    CHECK_NOTHROW(chain_member::make_Xij(3, 1, 2));
    CHECK_THROWS_AS(chain_member::make_Xij(3, 2, 3), invalid_member_error); // j = n
    CHECK_THROWS_AS(chain_member::make_Xij(2, 1, 2), invalid_member_error); // n < 3
    CHECK_THROWS_AS(chain_member::make_Xijk(4, 1, 3, 2), invalid_member_error);
    CHECK_THROWS_AS(chain_member::make_Xijkl(5, 1, 2, 3, 5), invalid_member_error);
    CHECK_THROWS_AS(chain_member::make_Xijkl(4, 1, 2, 3, 4), invalid_member_error);

    // one factor per site per term: mixing e and e' on a site is rejected
    product_term bad;
    bad.sign = 1;
    bad.factors = {{1, site_factor::e}, {1, site_factor::ep}};
    CHECK_THROWS_AS(chain_member::make_custom(2, {bad}), invalid_member_error);
}

TEST_CASE("chain member text round trip") {
    for (const auto* text : {"X@n=3", "Xij(1,2)@n=5", "Xijk(2,3,4)@n=6", "Xijkl(1,2,3,4)@n=7"}) {
        const auto m = chain_member::parse(text);
        CHECK(m.to_string() == text);
    }
    CHECK_THROWS_AS(chain_member::parse("Xq@n=3"), validation_error);
    CHECK_THROWS_AS(chain_member::parse("X"), validation_error);
}

TEST_CASE("eval_chain_member matches fixed values") {
    CHECK(eval_chain_member(chain_member::make_X(2), assignment::all_zeros(2)) == 1);
    CHECK(eval_chain_member(chain_member::make_X(3), assignment::all_ones(3)) == 2);
    CHECK(eval_chain_member(chain_member::make_Xij(4, 1, 2), assignment::all_ones(4)) == 2);
    CHECK(eval_chain_member(chain_member::make_Xijkl(6, 1, 2, 3, 4), assignment::all_ones(6)) ==
          3);
    CHECK_THROWS_AS(
        eval_chain_member(chain_member::make_X(3), assignment::all_zeros(2)),
        dimension_error);
}

TEST_CASE("eval_chain_member agrees with the direct-formula oracle everywhere") {
    for (int n = 2; n <= 6; ++n) {
        std::vector<chain_member> members{chain_member::make_X(n)};
        if (n >= 3) {
            members.push_back(chain_member::make_Xij(n, 1, 2));
            members.push_back(chain_member::make_Xij(n, 1, n - 1));
        }
        if (n >= 4) members.push_back(chain_member::make_Xijk(n, 1, 2, 3));
        if (n >= 5) members.push_back(chain_member::make_Xijkl(n, 1, 2, 3, 4));
        for (std::uint64_t w = 0; w < assignment_count(n); ++w) {
            const assignment a(n, w);
            const auto b = oracle::unpack(n, w);
            for (const auto& m : members) {
                int expect = 0;
                switch (m.kind) {
                    case member_kind::X: expect = oracle::eval_X(n, b); break;
                    case member_kind::Xij:
                        expect = oracle::eval_Xij(n, m.indices[0], m.indices[1], b);
                        break;
                    case member_kind::Xijk:
                        expect = oracle::eval_Xijk(n, m.indices[0], m.indices[1], m.indices[2], b);
                        break;
                    case member_kind::Xijkl:
                        expect = oracle::eval_Xijkl(n, m.indices[0], m.indices[1], m.indices[2],
                                                    m.indices[3], b);
                        break;
                    default: break;
                }
                REQUIRE(eval_chain_member(m, a) == expect);
            }
        }
    }
}

TEST_CASE("eval_chain_member is pure") {
    const auto m = chain_member::make_Xij(5, 2, 3);
    const assignment a(5, 0x2b7);
    const int first = eval_chain_member(m, a);
    for (int rep = 0; rep < 10; ++rep) CHECK(eval_chain_member(m, a) == first);
}

TEST_CASE("brute-force LHV bounds match the closed forms") {
    SECTION("fixed examples") {
        const auto bx = lhv_bounds_bruteforce(chain_member::make_X(2));
        CHECK(bx.min == 0);
        CHECK(bx.max == 1);
        const auto bij = lhv_bounds_bruteforce(chain_member::make_Xij(5, 1, 2));
        CHECK(bij.min == 0);
        CHECK(bij.max == 3);
        // frozen from exhaustive enumeration of 2^8 assignments
        const auto bijk = lhv_bounds_bruteforce(chain_member::make_Xijk(4, 1, 2, 3));
        CHECK(bijk.min == 0);
        CHECK(bijk.max == 2);
    }
    SECTION("witnesses evaluate to their bounds, min = 0 and max = U") {
        for (int n = 2; n <= 8; ++n) {
            std::vector<chain_member> members{chain_member::make_X(n)};
            if (n >= 3) members.push_back(chain_member::make_Xij(n, 1, 2));
            if (n >= 4) members.push_back(chain_member::make_Xijk(n, 1, 2, 3));
            if (n >= 5) members.push_back(chain_member::make_Xijkl(n, 1, 2, 3, 4));
            for (const auto& m : members) {
                const auto b = lhv_bounds_bruteforce(m);
                CHECK(b.min == 0);
                CHECK(b.max == *m.closed_form_upper());
                CHECK(eval_chain_member(m, b.min_witness) == b.min);
                CHECK(eval_chain_member(m, b.max_witness) == b.max);
            }
        }
    }
    SECTION("witness tie-break is the lowest packed word") {
        const auto b = lhv_bounds_bruteforce(chain_member::make_X(2));
        CHECK(b.max_witness.word == 0); // all zeros give X = 1 = max
        CHECK(b.min_witness.word == 1); // e = 10|e' = 00 gives X = 0
    }
    SECTION("cap is enforced") {
        CHECK_THROWS_AS(lhv_bounds_bruteforce(chain_member::make_X(13)), resource_limit_error);
        CHECK_THROWS_AS(lhv_bounds_bruteforce(chain_member::make_X(7), 6), resource_limit_error);
    }
}

TEST_CASE("master identity holds exactly") {
    CHECK(master_identity_check(1).holds);
    CHECK(master_identity_check(3).holds);
    CHECK(master_identity_check(8).holds); // 2^16 assignments
    CHECK_THROWS_AS(master_identity_check(13), resource_limit_error);
}

TEST_CASE("pointwise chain check") {
    CHECK(pointwise_chain_check(chain_member::make_X(4)).holds);
    CHECK(pointwise_chain_check(chain_member::make_Xijkl(5, 1, 2, 3, 4)).holds);

    product_term neg;
    neg.sign = -1;
    for (int k = 1; k <= 2; ++k) neg.factors.emplace_back(k, site_factor::ep);
    const auto res = pointwise_chain_check(chain_member::make_custom(2, {neg}));
    REQUIRE_FALSE(res.holds);
    REQUIRE(res.violation.has_value());
    // lowest violating word: e bits zero, both primed bits set
    CHECK(res.violation->to_string() == "e=00|e'=11");
}

TEST_CASE("exhaustive scan: every member value lies in [0, U] for n <= 8") {
    for (int n = 2; n <= 8; ++n) {
        std::vector<chain_member> members{chain_member::make_X(n)};
        for (int i = 1; i < n; ++i)
            for (int j = i + 1; j < n; ++j) {
                if (n >= 3) members.push_back(chain_member::make_Xij(n, i, j));
                for (int k = j + 1; k < n; ++k) {
                    if (n >= 4) members.push_back(chain_member::make_Xijk(n, i, j, k));
                    for (int l = k + 1; l < n; ++l)
                        if (n >= 5) members.push_back(chain_member::make_Xijkl(n, i, j, k, l));
                }
            }
        for (const auto& m : members) REQUIRE(pointwise_chain_check(m).holds);
    }
}

TEST_CASE("lhv_expectation") {
    SECTION("point masses") {
        std::vector<double> w(assignment_count(2), 0.0);
        w[0] = 1.0; // all zeros
        CHECK(lhv_expectation(chain_member::make_X(2), w) == 1.0);

        std::vector<double> w3(assignment_count(3), 0.0);
        w3.back() = 1.0; // all ones
        CHECK(lhv_expectation(chain_member::make_Xij(3, 1, 2), w3) == 1.0);
    }
    SECTION("uniform distribution, frozen oracle mean") {
        std::vector<double> w(assignment_count(3), 1.0 / 64.0);
        // sum of X over all 64 assignments is 24, so the mean is 3/8
        CHECK_THAT(lhv_expectation(chain_member::make_X(3), w),
                   Catch::Matchers::WithinAbs(0.375, 1e-12));
    }
    SECTION("validation") {
        std::vector<double> w(assignment_count(2), 0.3);
        CHECK_THROWS_AS(lhv_expectation(chain_member::make_X(2), w), validation_error);
        w.assign(assignment_count(2), 1.0 / 16.0);
        w[0] = -1.0 / 16.0;
        w[1] = 3.0 / 16.0;
        CHECK_THROWS_AS(lhv_expectation(chain_member::make_X(2), w), validation_error);
        CHECK_THROWS_AS(lhv_expectation(chain_member::make_X(2), std::vector<double>(3, 0.0)),
                        validation_error);
    }
    SECTION("random distributions stay inside the brute-force bounds") {
        std::mt19937_64 rng(7);
        std::uniform_real_distribution<double> u(0.0, 1.0);
        for (int n : {2, 4, 6}) {
            std::vector<chain_member> members{chain_member::make_X(n)};
            if (n >= 3) members.push_back(chain_member::make_Xij(n, 1, 2));
            if (n >= 4) members.push_back(chain_member::make_Xijk(n, 1, 2, 3));
            if (n >= 5) members.push_back(chain_member::make_Xijkl(n, 1, 2, 3, 4));
            for (const auto& m : members) {
                const auto b = lhv_bounds_bruteforce(m);
                for (int trial = 0; trial < 1000; ++trial) {
                    std::vector<double> w(assignment_count(n));
                    double total = 0.0;
                    for (auto& v : w) total += (v = u(rng));
                    for (auto& v : w) v /= total;
                    const double e = lhv_expectation(m, w);
                    REQUIRE(e >= b.min - 1e-9);
                    REQUIRE(e <= b.max + 1e-9);
                }
            }
        }
    }
}
