#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "uep/codespec.hpp"
#include "uep/ilp.hpp"

namespace uep {

inline nlohmann::json generator_to_json(const GeneratorMatrix& G) {
    return {{"k", G.k()},
            {"n", G.n()},
            {"x", G.multiplicities()}};
}

inline GeneratorMatrix generator_from_json(const nlohmann::json& j) {
    const int k = j.at("k").get<int>();
    MultiplicityVector x(k, j.at("x").get<std::vector<std::int64_t>>());
    auto G = build_generator(x);
    if (j.contains("n") && j.at("n").get<std::int64_t>() != static_cast<std::int64_t>(G.n()))
        throw SpecError("generator JSON: n does not match sum of x");
    return G;
}

inline nlohmann::json outcome_to_json(const SeparationVector& s, const SolveOutcome& o) {
    nlohmann::json witness_sparse = nlohmann::json::array();
    const auto& x = o.witness.values();
    for (std::size_t j = 0; j < x.size(); ++j)
        if (x[j] > 0) witness_sparse.push_back({j + 1, x[j]});
    nlohmann::json out{
        {"k", s.k()},
        {"s", s.values()},
        {"objective", o.objective},
        {"status", o.status == SolveStatus::proven_optimal ? "proven_optimal"
                                                           : "time_limited_incumbent"},
        {"lower_bound_at_exit", o.lower_bound_at_exit},
        {"nodes_explored", o.nodes_explored},
        {"witness_sparse", witness_sparse},
        {"wall_time_s", o.wall_time_s}};
    return out;
}

inline std::pair<SeparationVector, SolveOutcome> outcome_from_json(const nlohmann::json& j) {
    SeparationVector s(j.at("s").get<std::vector<int>>());
    const int k = s.k();
    std::vector<std::int64_t> x((std::size_t(1) << k) - 1, 0);
    for (const auto& entry : j.at("witness_sparse")) {
        const auto idx = entry.at(0).get<std::size_t>();
        if (idx < 1 || idx > x.size())
            throw SpecError("witness index out of range");
        x[idx - 1] = entry.at(1).get<std::int64_t>();
    }
    SolveOutcome o{
        j.at("objective").get<std::int64_t>(),
        MultiplicityVector(k, std::move(x)),
        j.at("status").get<std::string>() == "proven_optimal"
            ? SolveStatus::proven_optimal
            : SolveStatus::time_limited_incumbent,
        j.value("lower_bound_at_exit", std::int64_t(0)),
        j.value("nodes_explored", std::uint64_t(0)),
        std::nullopt,
        j.value("wall_time_s", 0.0)};
    return {std::move(s), std::move(o)};
}

} // namespace uep
