#include <doctest.h>

#include <algorithm>
#include <random>

#include "uep/codespec.hpp"
#include "uep/constraints.hpp"

using namespace uep;

TEST_CASE("separation_from_protection applies s_i = 2 t_i + 1") {
    CHECK(separation_from_protection(ProtectionProfile({1, 2, 3})).values() ==
          std::vector<int>{3, 5, 7});
    CHECK(separation_from_protection(ProtectionProfile({0})).values() ==
          std::vector<int>{1});
    CHECK(separation_from_protection(ProtectionProfile({1, 1})).values() ==
          std::vector<int>{3, 3});
}

TEST_CASE("non-monotone protection profiles are rejected") {
    CHECK_THROWS_AS(ProtectionProfile({2, 1}), SpecError);
    CHECK_THROWS_AS(ProtectionProfile({-1}), SpecError);
    CHECK_THROWS_AS(ProtectionProfile({}), SpecError);
}

TEST_CASE("separation vector validation") {
    CHECK_THROWS_AS(SeparationVector({3, 2}), SpecError);
    CHECK_THROWS_AS(SeparationVector({0}), SpecError);
    CHECK_NOTHROW(SeparationVector({3, 3, 5}));
}

TEST_CASE("build_generator reproduces the printed 3x11 optimum") {
    MultiplicityVector x(3, {3, 2, 2, 1, 1, 1, 1});
    auto G = build_generator(x);
    CHECK(G.n() == 11);
    CHECK(G.to_text() ==
          "00000001111\n"
          "00011110011\n"
          "11100110101\n");
}

TEST_CASE("build_generator edge cases") {
    auto rep = build_generator(MultiplicityVector(1, {3}));
    CHECK(rep.to_text() == "111\n");

    auto G2 = build_generator(MultiplicityVector(2, {4, 2, 1}));
    CHECK(G2.n() == 7);
    CHECK(G2.to_text() ==
          "0000111\n"
          "1111001\n");

    CHECK_THROWS_AS(build_generator(MultiplicityVector(2, {0, 0, 0})), SpecError);
}

TEST_CASE("separation_vector on printed examples") {
    auto G = build_generator(MultiplicityVector(3, {3, 2, 2, 1, 1, 1, 1}));
    CHECK(separation_vector(G).values() == std::vector<int>{4, 6, 7});

    std::vector<std::int64_t> x4(15, 1);
    x4[0] = 2;
    auto G4 = build_generator(MultiplicityVector(4, x4));
    CHECK(separation_vector(G4).values() == std::vector<int>{8, 8, 8, 9});

    auto rep = build_generator(MultiplicityVector(1, {3}));
    CHECK(separation_vector(rep).values() == std::vector<int>{3});
}

TEST_CASE("separation_vector refuses k above the brute-force limit") {
    auto G = build_generator(MultiplicityVector(3, {3, 2, 2, 1, 1, 1, 1}));
    CHECK_THROWS_AS(separation_vector(G, 2), InstanceTooLarge);
}

TEST_CASE("dominates") {
    CHECK(dominates(SeparationVector({4, 6, 7}), SeparationVector({3, 5, 7})));
    CHECK(dominates(SeparationVector({3, 5}), SeparationVector({3, 5})));
    CHECK_FALSE(dominates(SeparationVector({3, 4}), SeparationVector({3, 5})));
    CHECK_THROWS_AS(dominates(SeparationVector({3}), SeparationVector({3, 5})), SpecError);
}

TEST_CASE("separation is invariant under column order (canonicalization)") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 20; ++trial) {
        const int k = 1 + int(rng() % 4);
        const std::uint32_t ncols = (1u << k) - 1;
        std::vector<std::uint32_t> cols;
        const int n = 3 + int(rng() % 8);
        for (int c = 0; c < n; ++c) cols.push_back(1 + rng() % ncols);
        auto G1 = generator_from_columns(k, cols);
        std::shuffle(cols.begin(), cols.end(), rng);
        auto G2 = generator_from_columns(k, cols);
        CHECK(G1.to_text() == G2.to_text());
        CHECK(separation_vector(G1).values() == separation_vector(G2).values());
    }
}

TEST_CASE("column multiset of build_generator round-trips to x") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 20; ++trial) {
        const int k = 1 + int(rng() % 5);
        const std::uint32_t ncols = (1u << k) - 1;
        std::vector<std::int64_t> x(ncols, 0);
        for (std::uint32_t j = 0; j < ncols; ++j) x[j] = rng() % 3;
        if (std::all_of(x.begin(), x.end(), [](auto v) { return v == 0; })) x[0] = 1;
        auto G = build_generator(MultiplicityVector(k, x));
        // classify columns back by their tuple value
        std::vector<std::int64_t> back(ncols, 0);
        for (std::size_t c = 0; c < G.n(); ++c) {
            std::uint32_t val = 0;
            for (int i = 1; i <= k; ++i)
                if (G.row(i - 1).get(c)) val |= 1u << (k - i);
            ++back[val - 1];
        }
        CHECK(back == x);
    }
}

TEST_CASE("feasible multiplicity vectors yield dominating separation") {
    // soundness of the constraint system, brute-checked on random feasible x
    std::mt19937 rng(23);
    for (int trial = 0; trial < 40; ++trial) {
        const int k = 1 + int(rng() % 5);
        std::vector<int> sv(k);
        int cur = 1 + int(rng() % 3);
        for (int i = 0; i < k; ++i) {
            sv[i] = cur;
            cur += int(rng() % 3);
        }
        SeparationVector s(sv);
        auto p = assemble(s);
        // random x, then repair to feasibility by bumping variables of
        // violated rows
        std::vector<std::int64_t> x(p.num_vars(), 0);
        for (auto& v : x) v = rng() % 3;
        for (std::size_t r = 0; r < p.num_rows(); ++r) {
            for (;;) {
                std::int64_t cov = 0;
                for (std::uint32_t j = 0; j < p.num_vars(); ++j)
                    if (p.rows[r].get(j)) cov += x[j];
                if (cov >= p.rhs[r]) break;
                for (std::uint32_t j = 0; j < p.num_vars(); ++j)
                    if (p.rows[r].get(j)) { ++x[j]; break; }
            }
        }
        auto shat = separation_vector(build_generator(MultiplicityVector(k, x)));
        CHECK(dominates(shat, s));
    }
}
