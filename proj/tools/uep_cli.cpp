// Command line front end: constructs length-optimal unequal-error-protection
// codes, evaluates the closed-form bounds, and emits the broadcast-channel
// throughput model as CSV/JSON.

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "uep/bounds.hpp"
#include "uep/channel.hpp"
#include "uep/codespec.hpp"
#include "uep/constraints.hpp"
#include "uep/ilp.hpp"
#include "uep/serialize.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

constexpr const char* kSolverVersion = "1";

constexpr int kExitOk = 0;
constexpr int kExitValidation = 2;
constexpr int kExitGuard = 3;
constexpr int kExitTimeLimited = 4;

struct Manifest {
    std::string subcommand;
    json params = json::object();
    std::vector<std::string> outputs;
    int cache_hits = 0;
    int cache_misses = 0;
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();

    void print() const {
        json j{{"subcommand", subcommand},
               {"params", params},
               {"outputs", outputs},
               {"cache_hits", cache_hits},
               {"cache_misses", cache_misses},
               {"wall_time_s",
                std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
                    .count()}};
        std::cout << j.dump() << "\n";
    }
};

[[noreturn]] void fail(int code, const std::string& kind, const std::string& msg) {
    std::cerr << json{{"error", kind}, {"message", msg}}.dump() << "\n";
    std::exit(code);
}

void write_atomic(const fs::path& path, const std::string& content, Manifest& m) {
    if (path.has_parent_path()) fs::create_directories(path.parent_path());
    const fs::path tmp = path.string() + ".tmp";
    {
        std::ofstream out(tmp, std::ios::trunc);
        if (!out) fail(kExitValidation, "io", "cannot write " + path.string());
        out << content;
    }
    fs::rename(tmp, path);
    m.outputs.push_back(path.string());
}

std::vector<int> parse_int_list(const std::string& text) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            out.push_back(std::stoi(item));
        } catch (...) {
            fail(kExitValidation, "validation", "bad integer list entry: " + item);
        }
    }
    return out;
}

fs::path cache_dir() {
    if (const char* env = std::getenv("UEP_CACHE_DIR")) return fs::path(env);
    return fs::path(".uep-cache");
}

std::string cache_key(const uep::SeparationVector& s) {
    std::string key = "solve_k" + std::to_string(s.k()) + "_s";
    for (int i = 0; i < s.k(); ++i) {
        if (i) key += "-";
        key += std::to_string(s.at(i));
    }
    return key + "_v" + kSolverVersion + ".json";
}

// Cached outcomes are replayed through the verifier before being served.
std::optional<uep::SolveOutcome> cache_load(const uep::SeparationVector& s, Manifest& m) {
    const fs::path path = cache_dir() / cache_key(s);
    if (!fs::exists(path)) {
        ++m.cache_misses;
        return std::nullopt;
    }
    try {
        std::ifstream in(path);
        json j = json::parse(in);
        auto [s2, outcome] = uep::outcome_from_json(j);
        if (!(s2 == s)) throw uep::SpecError("cache key mismatch");
        auto shat = uep::separation_vector(uep::build_generator(outcome.witness));
        if (!uep::dominates(shat, s)) throw uep::SpecError("cached witness fails verification");
        if (outcome.witness.length() != outcome.objective)
            throw uep::SpecError("cached objective mismatch");
        ++m.cache_hits;
        return outcome;
    } catch (const std::exception&) {
        ++m.cache_misses;
        return std::nullopt;
    }
}

void cache_store(const uep::SeparationVector& s, const uep::SolveOutcome& o, Manifest& m) {
    const fs::path dir = cache_dir();
    fs::create_directories(dir);
    const fs::path path = dir / cache_key(s);
    const fs::path tmp = path.string() + ".tmp";
    {
        std::ofstream out(tmp, std::ios::trunc);
        out << uep::outcome_to_json(s, o).dump(2) << "\n";
    }
    fs::rename(tmp, path);
}

uep::SeparationVector separation_from_flags(const std::string& s_flag,
                                            const std::string& t_flag) {
    try {
        if (!s_flag.empty() && !t_flag.empty())
            fail(kExitValidation, "validation", "give either --s or --t, not both");
        if (!s_flag.empty()) return uep::SeparationVector(parse_int_list(s_flag));
        if (!t_flag.empty())
            return uep::separation_from_protection(uep::ProtectionProfile(parse_int_list(t_flag)));
    } catch (const uep::SpecError& e) {
        fail(kExitValidation, "validation", e.what());
    }
    fail(kExitValidation, "validation", "one of --s or --t is required");
}

uep::SeparationVector regime_s(int k) {
    std::vector<int> sv(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) sv[static_cast<std::size_t>(i)] = 2 * i + 3;
    return uep::SeparationVector(sv);
}

std::string csv_escape_free(const std::string& v) { return v; }

int cmd_construct(const std::string& s_flag, const std::string& t_flag,
                  double time_limit, const std::string& out_path,
                  const std::string& gmatrix_path, bool no_cache) {
    Manifest m;
    m.subcommand = "construct";
    m.params = {{"s", s_flag}, {"t", t_flag}, {"time_limit", time_limit}};
    auto s = separation_from_flags(s_flag, t_flag);

    std::optional<uep::SolveOutcome> outcome;
    if (!no_cache) outcome = cache_load(s, m);
    if (!outcome) {
        uep::SolveConfig cfg;
        cfg.time_budget_s = time_limit;
        outcome = uep::solve(uep::assemble(s), cfg);
        if (!no_cache && outcome->status == uep::SolveStatus::proven_optimal)
            cache_store(s, *outcome, m);
    }

    auto G = uep::build_generator(outcome->witness);
    auto shat = uep::separation_vector(G);
    const bool ok = uep::dominates(shat, s);

    json report = uep::outcome_to_json(s, *outcome);
    report["shat"] = shat.values();
    report["dominates"] = ok;
    std::cout << report.dump(2) << "\n";
    if (!out_path.empty()) write_atomic(out_path, report.dump(2) + "\n", m);
    if (!gmatrix_path.empty()) write_atomic(gmatrix_path, G.to_text(), m);
    m.print();
    if (!ok) fail(kExitValidation, "internal", "witness fails separation verification");
    return outcome->status == uep::SolveStatus::proven_optimal ? kExitOk : kExitTimeLimited;
}

int cmd_verify(const std::string& in_path) {
    Manifest m;
    m.subcommand = "verify";
    m.params = {{"in", in_path}};
    std::ifstream in(in_path);
    if (!in) fail(kExitValidation, "io", "cannot read " + in_path);
    json j;
    try {
        j = json::parse(in);
    } catch (const std::exception& e) {
        fail(kExitValidation, "validation", e.what());
    }
    try {
        auto [s, outcome] = uep::outcome_from_json(j);
        auto shat = uep::separation_vector(uep::build_generator(outcome.witness));
        const bool ok = uep::dominates(shat, s) &&
                        outcome.witness.length() == outcome.objective;
        std::cout << json{{"s", s.values()},
                          {"shat", shat.values()},
                          {"objective", outcome.objective},
                          {"valid", ok}}
                         .dump(2)
                  << "\n";
        m.print();
        return ok ? kExitOk : kExitValidation;
    } catch (const uep::SpecError& e) {
        fail(kExitValidation, "validation", e.what());
    }
}

int cmd_enumerate(const std::string& s_flag, int k_limit, const std::string& out_path) {
    Manifest m;
    m.subcommand = "enumerate";
    m.params = {{"s", s_flag}, {"k_limit", k_limit}};
    uep::SeparationVector s = separation_from_flags(s_flag, "");
    uep::SolveConfig cfg;
    cfg.enumerate_k_limit = k_limit;
    std::vector<uep::MultiplicityVector> all;
    try {
        all = uep::enumerate_optima(uep::assemble(s), cfg);
    } catch (const uep::InstanceTooLarge& e) {
        fail(kExitGuard, "guard", e.what());
    }
    json j{{"k", s.k()}, {"s", s.values()}, {"count", all.size()}};
    json sols = json::array();
    for (const auto& x : all) sols.push_back(x.values());
    j["optima"] = sols;
    std::cout << json{{"count", all.size()}}.dump() << "\n";
    if (!out_path.empty()) write_atomic(out_path, j.dump() + "\n", m);
    m.print();
    return kExitOk;
}

int cmd_bounds(int k_min, int k_max, const std::string& out_csv) {
    Manifest m;
    m.subcommand = "bounds";
    m.params = {{"k_min", k_min}, {"k_max", k_max}};
    if (k_min < 1 || k_min > k_max || k_max > 15)
        fail(kExitValidation, "validation", "need 1 <= k_min <= k_max <= 15");
    std::ostringstream csv;
    csv << "k,lower,n_s,upper\n";
    for (int k = k_min; k <= k_max; ++k) {
        auto s = regime_s(k);
        std::vector<int> tv(static_cast<std::size_t>(k));
        for (int i = 0; i < k; ++i) tv[static_cast<std::size_t>(i)] = i + 1;
        auto mw = uep::mw_upper_bound(uep::ProtectionProfile(tv));
        auto cached = cache_load(s, m);
        csv << k << "," << uep::lower_bound(s) << ",";
        if (cached) csv << cached->objective;
        csv << "," << mw.upper << "\n";
    }
    std::cout << csv.str();
    if (!out_csv.empty()) write_atomic(out_csv, csv.str(), m);
    m.print();
    return kExitOk;
}

int cmd_rate(int k_max, const std::string& out_csv) {
    Manifest m;
    m.subcommand = "rate";
    m.params = {{"k_max", k_max}};
    if (k_max < 1 || k_max > (1 << 15))
        fail(kExitValidation, "validation", "need 1 <= k_max <= 2^15");
    std::ostringstream csv;
    csv << "k,n_s,rate\n";
    std::vector<std::int64_t> ks;
    for (std::int64_t k = 1; k <= std::min(k_max, 64); ++k) ks.push_back(k);
    for (std::int64_t k = 128; k <= k_max; k *= 2) ks.push_back(k);
    for (auto k : ks) {
        const auto n = uep::asymptotic_length(k);
        csv << k << "," << n << "," << uep::asymptotic_rate(k) << "\n";
    }
    std::cout << csv.str();
    if (!out_csv.empty()) write_atomic(out_csv, csv.str(), m);
    m.print();
    return kExitOk;
}

int cmd_throughput(int k_min, int k_max, const std::string& alpha_spec,
                   const std::string& out_csv) {
    Manifest m;
    m.subcommand = "throughput";
    m.params = {{"k_min", k_min}, {"k_max", k_max}, {"alpha", alpha_spec}};
    if (k_min < 1 || k_min > k_max || k_max > (1 << 7))
        fail(kExitValidation, "validation", "need 1 <= k_min <= k_max <= 128");
    std::ostringstream csv;
    csv << "k,n_s,code_rate,throughput\n";
    for (int k = k_min; k <= k_max; ++k) {
        const auto n = uep::asymptotic_length(k);
        std::vector<double> alphas;
        if (alpha_spec == "auto") {
            alphas.assign(static_cast<std::size_t>(k), 1.0 / double(n));
        } else if (alpha_spec.find(',') != std::string::npos) {
            std::stringstream ss(alpha_spec);
            std::string item;
            while (std::getline(ss, item, ',')) alphas.push_back(std::stod(item));
            if (static_cast<int>(alphas.size()) != k)
                fail(kExitValidation, "validation",
                     "per-stage alpha list length must equal k");
        } else {
            try {
                alphas.assign(static_cast<std::size_t>(k), std::stod(alpha_spec));
            } catch (...) {
                fail(kExitValidation, "validation", "bad alpha: " + alpha_spec);
            }
        }
        try {
            auto rep = uep::throughput({alphas, n});
            csv << k << "," << n << "," << double(k) / double(n) << "," << rep.r_total
                << "\n";
        } catch (const uep::SpecError& e) {
            fail(kExitValidation, "validation", e.what());
        }
    }
    std::cout << csv.str();
    if (!out_csv.empty()) write_atomic(out_csv, csv.str(), m);
    m.print();
    return kExitOk;
}

int cmd_export_lp(const std::string& s_flag, const std::string& t_flag,
                  const std::string& out_path) {
    Manifest m;
    m.subcommand = "export-lp";
    m.params = {{"s", s_flag}, {"t", t_flag}};
    auto s = separation_from_flags(s_flag, t_flag);
    const auto text = uep::export_lp(uep::assemble(s));
    if (out_path.empty())
        std::cout << text;
    else
        write_atomic(out_path, text, m);
    m.print();
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"optimal unequal-error-protection code construction toolkit"};
    app.require_subcommand(1);

    std::string s_flag, t_flag, out_path, gmatrix_path, in_path, alpha_spec = "auto";
    double time_limit = 0.0;
    int k_min = 2, k_max = 8, k_limit = 4;
    bool no_cache = false;

    auto* construct = app.add_subcommand("construct", "solve for a length-optimal code");
    construct->add_option("--s", s_flag, "separation vector, comma separated");
    construct->add_option("--t", t_flag, "protection profile, comma separated");
    construct->add_option("--time-limit", time_limit, "seconds, 0 = unlimited");
    construct->add_option("--out", out_path, "solution JSON path");
    construct->add_option("--gmatrix", gmatrix_path, "generator matrix text path");
    construct->add_flag("--no-cache", no_cache, "bypass the result cache");

    auto* verify = app.add_subcommand("verify", "re-verify a solution JSON");
    verify->add_option("--in", in_path, "solution JSON path")->required();

    auto* enumerate = app.add_subcommand("enumerate", "list all optimal solutions");
    enumerate->add_option("--s", s_flag, "separation vector, comma separated");
    enumerate->add_option("--k-limit", k_limit, "enumeration guard on k");
    enumerate->add_option("--out", out_path, "output JSON path");

    auto* bounds = app.add_subcommand("bounds", "lower/upper bound table rows");
    bounds->add_option("--k-min", k_min, "first k");
    bounds->add_option("--k-max", k_max, "last k (at most 15)");
    bounds->add_option("--out", out_path, "output CSV path");

    auto* rate = app.add_subcommand("rate", "asymptotic code rate sweep");
    rate->add_option("--k-max", k_max, "largest k (at most 2^15)");
    rate->add_option("--out", out_path, "output CSV path");

    auto* tp = app.add_subcommand("throughput", "degraded-channel throughput sweep");
    tp->add_option("--k-min", k_min, "first k");
    tp->add_option("--k-max", k_max, "last k (at most 128)");
    tp->add_option("--alpha", alpha_spec,
                   "crossover: scalar, per-stage list, or 'auto' (= 1/n_s)");
    tp->add_option("--out", out_path, "output CSV path");

    auto* lp = app.add_subcommand("export-lp", "emit the instance as an LP listing");
    lp->add_option("--s", s_flag, "separation vector, comma separated");
    lp->add_option("--t", t_flag, "protection profile, comma separated");
    lp->add_option("--out", out_path, "output path (stdout when omitted)");

    CLI11_PARSE(app, argc, argv);

    if (construct->parsed())
        return cmd_construct(s_flag, t_flag, time_limit, out_path, gmatrix_path, no_cache);
    if (verify->parsed()) return cmd_verify(in_path);
    if (enumerate->parsed()) return cmd_enumerate(s_flag, k_limit, out_path);
    if (bounds->parsed()) return cmd_bounds(k_min, k_max, out_path);
    if (rate->parsed()) return cmd_rate(k_max, out_path);
    if (tp->parsed()) return cmd_throughput(k_min, k_max, alpha_spec, out_path);
    if (lp->parsed()) return cmd_export_lp(s_flag, t_flag, out_path);
    return kExitOk;
}
