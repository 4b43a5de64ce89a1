#include <doctest.h>

#include <set>

#include "uep/constraints.hpp"

using namespace uep;

namespace {
std::string row_text(const BitVec& r) {
    std::string out;
    for (std::size_t i = 0; i < r.size(); ++i) out += r.get(i) ? '1' : '0';
    return out;
}
} // namespace

TEST_CASE("tuple_matrix k=3 matches the printed layout") {
    auto Aa = tuple_matrix(3);
    CHECK(row_text(Aa.row(0)) == "0001111");
    CHECK(row_text(Aa.row(1)) == "0110011");
    CHECK(row_text(Aa.row(2)) == "1010101");
}

TEST_CASE("tuple_matrix small cases and guards") {
    auto A1 = tuple_matrix(1);
    CHECK(row_text(A1.row(0)) == "1");
    auto A2 = tuple_matrix(2);
    CHECK(row_text(A2.row(0)) == "011");
    CHECK(row_text(A2.row(1)) == "101");
    CHECK_THROWS_AS(tuple_matrix(0), SpecError);
    CHECK_THROWS_AS(tuple_matrix(21), SpecError);
}

TEST_CASE("constraint_block reproduces the printed blocks") {
    auto Aa = tuple_matrix(3);
    auto b1 = constraint_block(Aa, 1);
    REQUIRE(b1.size() == 1);
    CHECK(row_text(b1[0]) == "0001111");

    auto b2 = constraint_block(Aa, 2);
    REQUIRE(b2.size() == 2);
    CHECK(row_text(b2[0]) == "0110011");
    CHECK(row_text(b2[1]) == "0111100");

    auto b3 = constraint_block(Aa, 3);
    REQUIRE(b3.size() == 4);
    CHECK(row_text(b3[0]) == "1010101");
    CHECK(row_text(b3[1]) == "1011010");
    CHECK(row_text(b3[2]) == "1100110");
    CHECK(row_text(b3[3]) == "1101001");

    CHECK_THROWS_AS(constraint_block(Aa, 0), SpecError);
    CHECK_THROWS_AS(constraint_block(Aa, 4), SpecError);
}

TEST_CASE("assemble reproduces the seven-inequality system") {
    auto p = assemble(SeparationVector({3, 5, 7}));
    REQUIRE(p.num_rows() == 7);
    CHECK(row_text(p.rows[0]) == "0001111");
    CHECK(p.rhs[0] == 3);
    CHECK(row_text(p.rows[1]) == "0110011");
    CHECK(row_text(p.rows[2]) == "0111100");
    CHECK(p.rhs[1] == 5);
    CHECK(p.rhs[2] == 5);
    CHECK(row_text(p.rows[3]) == "1010101");
    CHECK(row_text(p.rows[4]) == "1011010");
    CHECK(row_text(p.rows[5]) == "1100110");
    CHECK(row_text(p.rows[6]) == "1101001");
    for (int r = 3; r < 7; ++r) CHECK(p.rhs[r] == 7);
    CHECK(p.block_start == std::vector<std::size_t>{0, 1, 3, 7});
}

TEST_CASE("assemble k=1 and k=2") {
    auto p1 = assemble(SeparationVector({3}));
    REQUIRE(p1.num_rows() == 1);
    CHECK(row_text(p1.rows[0]) == "1");
    CHECK(p1.rhs[0] == 3);

    auto p2 = assemble(SeparationVector({3, 5}));
    REQUIRE(p2.num_rows() == 3);
    CHECK(row_text(p2.rows[0]) == "011");
    CHECK(p2.rhs[0] == 3);
    CHECK(row_text(p2.rows[1]) == "101");
    CHECK(row_text(p2.rows[2]) == "110");
    CHECK(p2.rhs[1] == 5);
    CHECK(p2.rhs[2] == 5);
}

TEST_CASE("every column of A has exactly 2^{k-1} ones") {
    for (int k = 1; k <= 12; ++k) {
        std::vector<int> sv(static_cast<std::size_t>(k));
        for (int i = 0; i < k; ++i) sv[static_cast<std::size_t>(i)] = 2 * i + 3;
        auto p = assemble(SeparationVector(sv));
        for (std::uint32_t j = 0; j < p.num_vars(); ++j) {
            std::size_t ones = 0;
            for (std::size_t r = 0; r < p.num_rows(); ++r)
                if (p.rows[r].get(j)) ++ones;
            REQUIRE(ones == std::size_t(1) << (k - 1));
        }
    }
}

TEST_CASE("rows of A enumerate all nonzero coefficient patterns once") {
    for (int k = 1; k <= 8; ++k) {
        auto Aa = tuple_matrix(k);
        std::set<std::uint32_t> masks;
        for (int i = 1; i <= k; ++i)
            for (std::uint32_t m = 0; m < (1u << (i - 1)); ++m)
                masks.insert(block_row_mask(k, i, m));
        CHECK(masks.size() == (std::size_t(1) << k) - 1);
        CHECK(*masks.begin() >= 1);
        CHECK(*masks.rbegin() <= (1u << k) - 1);
    }
}

TEST_CASE("constant vector x_j = s_k is always feasible") {
    for (int k = 1; k <= 8; ++k) {
        std::vector<int> sv(static_cast<std::size_t>(k));
        for (int i = 0; i < k; ++i) sv[static_cast<std::size_t>(i)] = 2 * i + 3;
        auto p = assemble(SeparationVector(sv));
        for (std::size_t r = 0; r < p.num_rows(); ++r) {
            std::int64_t cov = 0;
            for (std::uint32_t j = 0; j < p.num_vars(); ++j)
                if (p.rows[r].get(j)) cov += sv.back();
            REQUIRE(cov >= p.rhs[r]);
        }
    }
}

TEST_CASE("lp export lists objective, constraints and integrality") {
    auto p = assemble(SeparationVector({3, 5}));
    auto text = export_lp(p);
    CHECK(text.find("Minimize") != std::string::npos);
    CHECK(text.find("obj: x1 + x2 + x3") != std::string::npos);
    CHECK(text.find("c1: x2 + x3 >= 3") != std::string::npos);
    CHECK(text.find("c2: x1 + x3 >= 5") != std::string::npos);
    CHECK(text.find("c3: x1 + x2 >= 5") != std::string::npos);
    CHECK(text.find("General") != std::string::npos);
    CHECK(text.find("End") != std::string::npos);
}
