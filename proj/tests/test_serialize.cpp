#include <doctest.h>

#include "uep/serialize.hpp"

using namespace uep;

TEST_CASE("generator json round trip") {
    MultiplicityVector x(3, {3, 2, 2, 1, 1, 1, 1});
    auto G = build_generator(x);
    auto j = generator_to_json(G);
    CHECK(j["k"] == 3);
    CHECK(j["n"] == 11);
    auto G2 = generator_from_json(j);
    CHECK(G2.to_text() == G.to_text());
}

TEST_CASE("generator json rejects inconsistent n") {
    nlohmann::json j{{"k", 2}, {"n", 99}, {"x", {4, 2, 1}}};
    CHECK_THROWS_AS(generator_from_json(j), SpecError);
}

TEST_CASE("solve outcome json round trip") {
    SeparationVector s({3, 5, 7});
    auto out = solve(assemble(s));
    auto j = outcome_to_json(s, out);
    auto [s2, o2] = outcome_from_json(j);
    CHECK(s2 == s);
    CHECK(o2.objective == out.objective);
    CHECK(o2.status == out.status);
    CHECK(o2.witness.values() == out.witness.values());
}
