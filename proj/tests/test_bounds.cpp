#include <doctest.h>

#include <random>

#include "uep/bounds.hpp"

using namespace uep;

namespace {
SeparationVector regime_s(int k) {
    std::vector<int> sv(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) sv[static_cast<std::size_t>(i)] = 2 * i + 3;
    return SeparationVector(sv);
}
ProtectionProfile regime_t(int k) {
    std::vector<int> tv(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) tv[static_cast<std::size_t>(i)] = i + 1;
    return ProtectionProfile(tv);
}
} // namespace

TEST_CASE("lower_bound matches the published table for the staircase regime") {
    const std::vector<std::int64_t> expected{7,  11, 16, 20, 25, 30, 35,
                                             39, 44, 49, 55, 59, 64, 69};
    for (int k = 2; k <= 15; ++k)
        CHECK(lower_bound(regime_s(k)) == expected[static_cast<std::size_t>(k - 2)]);
    CHECK(lower_bound(SeparationVector({1})) == 1);
}

TEST_CASE("lower_bound agrees with the reversed-index form") {
    std::mt19937 rng(42);
    for (int trial = 0; trial < 10000; ++trial) {
        const int k = 1 + int(rng() % 12);
        std::vector<int> sv(static_cast<std::size_t>(k));
        int cur = 1 + int(rng() % 4);
        for (int i = 0; i < k; ++i) {
            sv[static_cast<std::size_t>(i)] = cur;
            cur += int(rng() % 4);
        }
        SeparationVector s(sv);
        // independent evaluation: reversed s', divisor 2^{i-1}
        std::int64_t alt = 0;
        for (int i = 1; i <= k; ++i) {
            const std::int64_t d = std::int64_t(1) << (i - 1);
            alt += (sv[static_cast<std::size_t>(k - i)] + d - 1) / d;
        }
        REQUIRE(lower_bound(s) == alt);
        REQUIRE(lower_bound(s) >=
                static_cast<std::int64_t>(std::ceil(lp_form_bound(s) - 1e-9)));
    }
}

TEST_CASE("mw_upper_bound reproduces the published upper bounds") {
    const std::vector<std::int64_t> expected{7,  12, 19, 25, 32, 39, 46,
                                             53, 60, 67, 74, 81, 88, 95};
    for (int k = 2; k <= 15; ++k) {
        auto mw = mw_upper_bound(regime_t(k));
        CHECK(mw.upper == expected[static_cast<std::size_t>(k - 2)]);
        CHECK(mw.upper == k + mw.r_u);
        CHECK(mw.upper >= lower_bound(regime_s(k)));
    }
}

TEST_CASE("mw_upper_bound intermediate values for k=2 and k=3") {
    auto mw2 = mw_upper_bound(ProtectionProfile({1, 2}));
    CHECK(mw2.upper == 7);
    CHECK(mw2.r_u == 5);
    CHECK(mw2.gamma == 22);

    auto mw3 = mw_upper_bound(ProtectionProfile({1, 2, 3}));
    CHECK(mw3.upper == 12);
    CHECK(mw3.r_u == 9);
    CHECK(mw3.gamma == 442);
}

TEST_CASE("binomial helper") {
    CHECK(binomial(10, 3) == 120);
    CHECK(binomial(3, 10) == 0);
    CHECK(binomial(5, -1) == 0);
    CHECK(binomial(94, 40) == BigInt("577314841027702760890242258"));
}

TEST_CASE("asymptotic_length equals lower_bound on the staircase regime") {
    for (int k = 1; k <= 256; ++k)
        REQUIRE(asymptotic_length(k) == lower_bound(regime_s(k)));
    CHECK(asymptotic_length(1) == 3);
    // regression constant from an independent big-integer summation
    CHECK(asymptotic_length(1024) == 5108);
    CHECK(asymptotic_length(32768) == 163823);
}

TEST_CASE("asymptotic_rate values and limit") {
    CHECK(asymptotic_rate(1) == doctest::Approx(1.0 / 3.0));
    CHECK(asymptotic_rate(2) == doctest::Approx(2.0 / 7.0));
    CHECK(asymptotic_rate(32768) == doctest::Approx(0.2).epsilon(1e-3 / 0.2));
    for (int k = 2; k <= 4096; ++k) {
        const double r = asymptotic_rate(k);
        REQUIRE(r > 0.2);
        REQUIRE(r <= 0.29);
    }
}

TEST_CASE("digit-decomposition residual stays within the floor-log bracket") {
    auto digitsum2 = [](std::int64_t k) {
        std::int64_t s = 0;
        while (k) { s += k & 1; k >>= 1; }
        return s;
    };
    for (std::int64_t k = 4; k <= (1 << 12); ++k) {
        const auto x = static_cast<std::int64_t>(std::floor(std::log2(double(k))));
        const auto residual = asymptotic_length(k) - (3 * k + 1) - (k - x - 2) -
                              (k - digitsum2(k));
        REQUIRE(residual >= 0);
        REQUIRE(residual <= x);
    }
}
