#pragma once

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "uep/bounds.hpp"
#include "uep/codespec.hpp"
#include "uep/constraints.hpp"
#include "uep/simplex.hpp"

namespace uep {

enum class BoundMethod { lp_relaxation, weighted_sum };
enum class SolveStatus { proven_optimal, time_limited_incumbent };

struct SolveConfig {
    double time_budget_s = 0.0;      // 0 = unlimited
    bool enumerate_optima = false;
    BoundMethod node_bound_method = BoundMethod::lp_relaxation;
    bool symmetry_breaking = false;
    std::uint64_t rng_seed = 0x5eed;
    int enumerate_k_limit = 4;

    void validate() const {
        if (enumerate_optima && symmetry_breaking)
            throw SpecError("enumeration requires symmetry_breaking = false");
    }
};

struct SolveOutcome {
    std::int64_t objective;
    MultiplicityVector witness;
    SolveStatus status;
    std::int64_t lower_bound_at_exit;
    std::uint64_t nodes_explored;
    std::optional<std::vector<MultiplicityVector>> all_optima;
    double wall_time_s = 0.0;
};

namespace detail {

// Up to 2^k-1 <= 2^20-1 rows would not fit a fixed bitset; the solver only
// runs branch and bound for k <= 20 but uses row bitsets only for k <= 8
// style instances, so size for 1024 rows.
using RowMask = std::vector<std::uint64_t>;

inline void mask_set(RowMask& m, std::size_t i) { m[i >> 6] |= std::uint64_t(1) << (i & 63); }
inline bool mask_subset(const RowMask& a, const RowMask& b) {
    for (std::size_t w = 0; w < a.size(); ++w)
        if (a[w] & ~b[w]) return false;
    return true;
}

class IlpSolver {
public:
    IlpSolver(const IlpProblem& p, const SolveConfig& cfg)
        : p_(p), cfg_(cfg), k_(p.k), num_vars_(p.num_vars()),
          num_rows_(p.num_rows()), rng_(cfg.rng_seed) {
        cfg_.validate();
        build_incidence();
        build_subset_bounds();
    }

    SolveOutcome solve() {
        const auto t0 = std::chrono::steady_clock::now();
        deadline_set_ = cfg_.time_budget_s > 0.0;
        deadline_ = t0 + std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                        std::chrono::duration<double>(cfg_.time_budget_s));

        // root integer lower bound
        const double cut_lp = cut_lp_bound({}, nullptr, &root_primal_);
        root_lb_ = std::max<std::int64_t>(
            static_cast<std::int64_t>(std::ceil(cut_lp - 1e-6)), lower_bound(p_.s));

        // primal: round up the LP point, trim, then local search
        std::vector<std::int64_t> x = rounded_lp_point();
        greedy_decrement(x);
        best_ = x;
        best_obj_ = sum(x);
        local_search();

        std::uint64_t nodes = 0;
        bool proven = best_obj_ == root_lb_;
        if (!proven && !time_up())
            proven = branch_and_bound(nodes);

        SolveOutcome out{
            best_obj_,
            MultiplicityVector(k_, best_),
            proven ? SolveStatus::proven_optimal : SolveStatus::time_limited_incumbent,
            proven ? best_obj_ : root_lb_,
            nodes,
            std::nullopt,
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count()};
        return out;
    }

    // All feasible x with objective equal to the proven optimum,
    // lexicographically sorted.
    std::vector<MultiplicityVector> enumerate(std::int64_t optimum) {
        std::vector<MultiplicityVector> out;
        std::vector<std::int64_t> x(num_vars_, 0);
        std::vector<std::int64_t> resid(p_.rhs.begin(), p_.rhs.end());
        std::vector<std::int64_t> in_subset(subset_lb_.size(), 0);
        enum_rec(0, optimum, x, resid, in_subset, out);
        return out;
    }

    // Admissible bound on the objective of every feasible completion of a
    // partial assignment (entries without a value are free).
    double node_bound(const std::vector<std::optional<std::int64_t>>& partial,
                      BoundMethod method) const {
        std::int64_t fixed_sum = 0;
        std::vector<std::int64_t> resid(p_.rhs.begin(), p_.rhs.end());
        std::vector<bool> free_var(num_vars_, true);
        for (std::uint32_t j = 0; j < num_vars_; ++j) {
            if (j < partial.size() && partial[j]) {
                free_var[j] = false;
                fixed_sum += *partial[j];
                for (auto r : var_rows_[j]) resid[r] -= *partial[j];
            }
        }
        if (method == BoundMethod::weighted_sum)
            return static_cast<double>(fixed_sum) + weighted_sum_residual(resid);
        return static_cast<double>(fixed_sum) +
               plain_lp_residual(resid, free_var);
    }

private:
    void build_incidence() {
        var_rows_.assign(num_vars_, {});
        row_vars_.assign(num_rows_, {});
        for (std::size_t r = 0; r < num_rows_; ++r)
            for (std::uint32_t j = 0; j < num_vars_; ++j)
                if (p_.rows[r].get(j)) {
                    var_rows_[j].push_back(r);
                    row_vars_[r].push_back(j);
                }
        const std::size_t words = (num_rows_ + 63) / 64;
        var_rowmask_.assign(num_vars_, RowMask(words, 0));
        for (std::uint32_t j = 0; j < num_vars_; ++j)
            for (auto r : var_rows_[j]) mask_set(var_rowmask_[j], r);
    }

    // For every nonempty coordinate subset T the rows indexed by T generate a
    // code with separation (s_i)_{i in T}, supported on the columns whose
    // T-restriction is nonzero. The closed-form length bound for that
    // sub-vector is therefore a valid inequality over those columns.
    void build_subset_bounds() {
        subset_mask_.clear();
        subset_lb_.clear();
        for (std::uint32_t t = 1; t <= num_vars_; ++t) {
            std::vector<int> sub;
            for (int i = 1; i <= k_; ++i)
                if (tuple_bit(k_, i, t)) sub.push_back(p_.s.at(i - 1));
            subset_mask_.push_back(t);
            subset_lb_.push_back(lower_bound(SeparationVector(sub)));
        }
    }

    static std::int64_t sum(const std::vector<std::int64_t>& x) {
        std::int64_t s = 0;
        for (auto v : x) s += v;
        return s;
    }

    bool time_up() const {
        return deadline_set_ && std::chrono::steady_clock::now() >= deadline_;
    }

    double weighted_sum_residual(const std::vector<std::int64_t>& resid) const {
        // uniform dual weights 1/2^{k-1} are feasible because every column of
        // A has exactly 2^{k-1} ones
        std::int64_t acc = 0;
        for (std::size_t r = 0; r < num_rows_; ++r)
            if (resid[r] > 0) acc += resid[r];
        return static_cast<double>(acc) / static_cast<double>(std::int64_t(1) << (k_ - 1));
    }

    // LP value of the residual of the original system, via the dual
    // (maximize resid.y subject to, per free column j, sum of y over the
    // rows containing j at most 1).
    double plain_lp_residual(const std::vector<std::int64_t>& resid,
                             const std::vector<bool>& free_var) const {
        std::vector<std::size_t> active;
        for (std::size_t r = 0; r < num_rows_; ++r)
            if (resid[r] > 0) active.push_back(r);
        if (active.empty()) return 0.0;
        std::vector<std::size_t> free_idx;
        for (std::uint32_t j = 0; j < num_vars_; ++j)
            if (free_var[j]) free_idx.push_back(j);
        std::vector<std::vector<double>> G(free_idx.size(),
                                           std::vector<double>(active.size(), 0.0));
        std::vector<double> h(free_idx.size(), 1.0), c(active.size());
        for (std::size_t col = 0; col < active.size(); ++col)
            c[col] = static_cast<double>(resid[active[col]]);
        for (std::size_t row = 0; row < free_idx.size(); ++row)
            for (std::size_t col = 0; col < active.size(); ++col)
                if (p_.rows[active[col]].get(static_cast<std::uint32_t>(free_idx[row])))
                    G[row][col] = 1.0;
        auto res = Simplex::maximize(G, h, c);
        return res.value;  // feasible dual objective, admissible even on
                           // iteration-limit exit
    }

    // LP bound of the residual system strengthened with the subset
    // inequalities. fixed maps var -> value for fixed vars (empty = root).
    // Optionally recovers the primal point (root use only).
    double cut_lp_bound(const std::vector<std::pair<std::uint32_t, std::int64_t>>& fixed,
                        const std::vector<bool>* free_var_opt,
                        std::vector<double>* primal_out) const {
        std::vector<bool> free_var(num_vars_, true);
        std::vector<std::int64_t> resid(p_.rhs.begin(), p_.rhs.end());
        std::vector<std::int64_t> cut_resid(subset_lb_);
        for (auto [j, v] : fixed) {
            free_var[j] = false;
            for (auto r : var_rows_[j]) resid[r] -= v;
            for (std::size_t t = 0; t < subset_mask_.size(); ++t)
                if (subset_mask_[t] & (j + 1)) cut_resid[t] -= v;
        }
        if (free_var_opt) free_var = *free_var_opt;

        struct ActiveRow { bool is_cut; std::size_t idx; double rhs; };
        std::vector<ActiveRow> active;
        for (std::size_t r = 0; r < num_rows_; ++r)
            if (resid[r] > 0) active.push_back({false, r, double(resid[r])});
        for (std::size_t t = 0; t < subset_mask_.size(); ++t)
            if (cut_resid[t] > 0) active.push_back({true, t, double(cut_resid[t])});
        if (active.empty()) return 0.0;

        std::vector<std::size_t> free_idx;
        for (std::uint32_t j = 0; j < num_vars_; ++j)
            if (free_var[j]) free_idx.push_back(j);
        std::vector<std::vector<double>> G(free_idx.size(),
                                           std::vector<double>(active.size(), 0.0));
        std::vector<double> h(free_idx.size(), 1.0), c(active.size());
        for (std::size_t col = 0; col < active.size(); ++col) c[col] = active[col].rhs;
        for (std::size_t row = 0; row < free_idx.size(); ++row) {
            const auto j = static_cast<std::uint32_t>(free_idx[row]);
            for (std::size_t col = 0; col < active.size(); ++col) {
                const auto& a = active[col];
                const bool hit = a.is_cut ? ((subset_mask_[a.idx] & (j + 1)) != 0)
                                          : p_.rows[a.idx].get(j);
                if (hit) G[row][col] = 1.0;
            }
        }
        std::vector<double> slack_duals;
        auto res = Simplex::maximize(G, h, c, 1e-9,
                                     primal_out ? &slack_duals : nullptr);
        if (primal_out) {
            primal_out->assign(num_vars_, 0.0);
            for (std::size_t row = 0; row < free_idx.size(); ++row)
                (*primal_out)[free_idx[row]] = std::max(0.0, slack_duals[row]);
        }
        return res.value;
    }

    std::vector<std::int64_t> rounded_lp_point() const {
        std::vector<std::int64_t> x(num_vars_, 0);
        for (std::uint32_t j = 0; j < num_vars_; ++j)
            x[j] = static_cast<std::int64_t>(std::ceil(root_primal_[j] - 1e-9));
        // rounding up is feasible because the constraint matrix is nonnegative,
        // but guard against LP drift anyway
        auto slack = slack_of(x);
        for (std::size_t r = 0; r < num_rows_; ++r)
            while (slack[r] < 0) {
                ++x[row_vars_[r].front()];
                for (auto rr : var_rows_[row_vars_[r].front()]) ++slack[rr];
            }
        return x;
    }

    std::vector<std::int64_t> slack_of(const std::vector<std::int64_t>& x) const {
        std::vector<std::int64_t> slack(num_rows_);
        for (std::size_t r = 0; r < num_rows_; ++r) {
            std::int64_t cov = 0;
            for (auto j : row_vars_[r]) cov += x[j];
            slack[r] = cov - p_.rhs[r];
        }
        return slack;
    }

    // repeatedly drop single units while feasibility is kept, lowest index
    // first, until a fixed point
    void greedy_decrement(std::vector<std::int64_t>& x) const {
        auto slack = slack_of(x);
        bool changed = true;
        while (changed) {
            changed = false;
            for (std::uint32_t j = 0; j < num_vars_; ++j) {
                while (x[j] > 0) {
                    bool ok = true;
                    for (auto r : var_rows_[j])
                        if (slack[r] < 1) { ok = false; break; }
                    if (!ok) break;
                    --x[j];
                    for (auto r : var_rows_[j]) --slack[r];
                    changed = true;
                }
            }
        }
    }

    // first-improvement exchange: drop one unit from each of a, b (a <= b),
    // add one unit of some c; net objective -1
    bool exchange_2_1(std::vector<std::int64_t>& x,
                      std::vector<std::int64_t>& slack) const {
        std::vector<std::uint32_t> supp;
        for (std::uint32_t j = 0; j < num_vars_; ++j)
            if (x[j] > 0) supp.push_back(j);
        const std::size_t words = var_rowmask_[0].size();
        RowMask deficit(words);
        for (std::size_t ai = 0; ai < supp.size(); ++ai) {
            for (std::size_t bi = ai; bi < supp.size(); ++bi) {
                const auto a = supp[ai], b = supp[bi];
                if (a == b && x[a] < 2) continue;
                bool double_deficit = false;
                std::fill(deficit.begin(), deficit.end(), 0);
                bool any = false;
                for (auto r : var_rows_[a]) {
                    const std::int64_t drop = 1 + (p_.rows[r].get(b) ? 1 : 0);
                    if (slack[r] - drop < 0) {
                        if (slack[r] - drop < -1) { double_deficit = true; break; }
                        mask_set(deficit, r);
                        any = true;
                    }
                }
                if (double_deficit) continue;
                for (auto r : var_rows_[b]) {
                    if (p_.rows[r].get(a)) continue;  // already counted
                    if (slack[r] - 1 < 0) { mask_set(deficit, r); any = true; }
                }
                if (!any) continue;  // greedy_decrement would have caught it
                for (std::uint32_t c = 0; c < num_vars_; ++c) {
                    if (!mask_subset(deficit, var_rowmask_[c])) continue;
                    --x[a]; --x[b]; ++x[c];
                    for (auto r : var_rows_[a]) --slack[r];
                    for (auto r : var_rows_[b]) --slack[r];
                    for (auto r : var_rows_[c]) ++slack[r];
                    return true;
                }
            }
        }
        return false;
    }

    // sideways move: shift one unit from a random support column to another
    // feasible column
    bool plateau_swap(std::vector<std::int64_t>& x,
                      std::vector<std::int64_t>& slack) {
        std::vector<std::uint32_t> supp;
        for (std::uint32_t j = 0; j < num_vars_; ++j)
            if (x[j] > 0) supp.push_back(j);
        std::shuffle(supp.begin(), supp.end(), rng_);
        std::vector<std::uint32_t> cols(num_vars_);
        for (std::uint32_t j = 0; j < num_vars_; ++j) cols[j] = j;
        const std::size_t words = var_rowmask_[0].size();
        RowMask deficit(words);
        for (auto a : supp) {
            std::fill(deficit.begin(), deficit.end(), 0);
            for (auto r : var_rows_[a])
                if (slack[r] < 1) mask_set(deficit, r);
            std::shuffle(cols.begin(), cols.end(), rng_);
            for (auto c : cols) {
                if (c == a) continue;
                if (!mask_subset(deficit, var_rowmask_[c])) continue;
                --x[a]; ++x[c];
                for (auto r : var_rows_[a]) --slack[r];
                for (auto r : var_rows_[c]) ++slack[r];
                return true;
            }
        }
        return false;
    }

    void local_search() {
        std::vector<std::int64_t> x = best_;
        auto slack = slack_of(x);
        // step budget grows with instance size; the walk is deterministic
        // under the configured seed
        const std::size_t max_steps = 2000 + 600 * static_cast<std::size_t>(num_vars_);
        std::size_t steps = 0;
        while (best_obj_ > root_lb_ && steps < max_steps && !time_up()) {
            ++steps;
            if (exchange_2_1(x, slack)) {
                greedy_decrement(x);
                slack = slack_of(x);
                const auto obj = sum(x);
                if (obj < best_obj_) { best_obj_ = obj; best_ = x; }
                continue;
            }
            if (!plateau_swap(x, slack)) break;
        }
    }

    // ---- complete DFS branch and bound ----

    struct SearchState {
        std::vector<std::int64_t> x;
        std::vector<bool> fixed;
        std::vector<std::int64_t> resid;        // original rows
        std::vector<std::int64_t> cut_resid;    // subset inequalities
        std::vector<int> free_count;            // per original row
        std::int64_t fixed_sum = 0;
    };

    // returns false on time-out
    bool branch_and_bound(std::uint64_t& nodes) {
        SearchState st;
        st.x.assign(num_vars_, 0);
        st.fixed.assign(num_vars_, false);
        st.resid.assign(p_.rhs.begin(), p_.rhs.end());
        st.cut_resid = subset_lb_;
        st.free_count.assign(num_rows_, 0);
        for (std::size_t r = 0; r < num_rows_; ++r)
            st.free_count[r] = static_cast<int>(row_vars_[r].size());
        return bb_rec(st, nodes);
    }

    bool bb_rec(SearchState& st, std::uint64_t& nodes) {
        if ((++nodes & 1023) == 0 && time_up()) return false;
        if (best_obj_ <= root_lb_) return true;

        // cheap integer prunes
        std::int64_t max_resid = -1;
        std::size_t mv_row = 0;
        std::int64_t resid_total = 0;
        for (std::size_t r = 0; r < num_rows_; ++r) {
            if (st.resid[r] > 0) {
                if (st.fixed_sum + st.resid[r] >= best_obj_) return true;
                if (st.free_count[r] == 0) return true;  // infeasible
                resid_total += st.resid[r];
                if (st.resid[r] > max_resid) { max_resid = st.resid[r]; mv_row = r; }
            }
        }
        if (max_resid < 0) {
            // feasible leaf: free vars complete with zero
            if (st.fixed_sum < best_obj_ &&
                (!cfg_.symmetry_breaking || symmetry_canonical(st.x))) {
                best_obj_ = st.fixed_sum;
                best_ = st.x;
            }
            return true;
        }
        for (std::size_t t = 0; t < subset_mask_.size(); ++t)
            if (st.fixed_sum + std::max<std::int64_t>(st.cut_resid[t], 0) >= best_obj_)
                return true;
        const auto ws = st.fixed_sum +
                        static_cast<std::int64_t>(std::ceil(
                            double(resid_total) / double(std::int64_t(1) << (k_ - 1)) - 1e-9));
        if (ws >= best_obj_) return true;

        if (cfg_.node_bound_method == BoundMethod::lp_relaxation) {
            std::vector<bool> free_var(num_vars_);
            for (std::uint32_t j = 0; j < num_vars_; ++j) free_var[j] = !st.fixed[j];
            const double lp = cut_lp_residual_from_state(st, free_var);
            if (st.fixed_sum + static_cast<std::int64_t>(std::ceil(lp - 1e-6)) >= best_obj_)
                return true;
        }

        // branching variable: free var of the most violated row with the
        // largest column popcount, ties to the lowest index
        std::uint32_t branch = num_vars_;
        std::size_t best_pop = 0;
        for (auto j : row_vars_[mv_row]) {
            if (st.fixed[j]) continue;
            const auto pop = var_rows_[j].size();
            if (branch == num_vars_ || pop > best_pop) { branch = j; best_pop = pop; }
        }

        std::int64_t ub = 0;
        for (auto r : var_rows_[branch]) ub = std::max(ub, st.resid[r]);
        ub = std::min<std::int64_t>(ub, p_.s.back());

        st.fixed[branch] = true;
        for (auto r : var_rows_[branch]) --st.free_count[r];
        bool ok = true;
        for (std::int64_t v = 0; v <= ub && ok; ++v) {
            st.x[branch] = v;
            st.fixed_sum += v;
            for (auto r : var_rows_[branch]) st.resid[r] -= v;
            for (std::size_t t = 0; t < subset_mask_.size(); ++t)
                if (subset_mask_[t] & (branch + 1)) st.cut_resid[t] -= v;
            ok = bb_rec(st, nodes);
            st.fixed_sum -= v;
            for (auto r : var_rows_[branch]) st.resid[r] += v;
            for (std::size_t t = 0; t < subset_mask_.size(); ++t)
                if (subset_mask_[t] & (branch + 1)) st.cut_resid[t] += v;
        }
        st.x[branch] = 0;
        st.fixed[branch] = false;
        for (auto r : var_rows_[branch]) ++st.free_count[r];
        return ok;
    }

    double cut_lp_residual_from_state(const SearchState& st,
                                      const std::vector<bool>& free_var) const {
        struct ActiveRow { bool is_cut; std::size_t idx; };
        std::vector<ActiveRow> active;
        std::vector<double> c;
        for (std::size_t r = 0; r < num_rows_; ++r)
            if (st.resid[r] > 0) { active.push_back({false, r}); c.push_back(double(st.resid[r])); }
        for (std::size_t t = 0; t < subset_mask_.size(); ++t)
            if (st.cut_resid[t] > 0) { active.push_back({true, t}); c.push_back(double(st.cut_resid[t])); }
        if (active.empty()) return 0.0;
        std::vector<std::size_t> free_idx;
        for (std::uint32_t j = 0; j < num_vars_; ++j)
            if (free_var[j]) free_idx.push_back(j);
        std::vector<std::vector<double>> G(free_idx.size(),
                                           std::vector<double>(active.size(), 0.0));
        std::vector<double> h(free_idx.size(), 1.0);
        for (std::size_t row = 0; row < free_idx.size(); ++row) {
            const auto j = static_cast<std::uint32_t>(free_idx[row]);
            for (std::size_t col = 0; col < active.size(); ++col) {
                const auto& a = active[col];
                const bool hit = a.is_cut ? ((subset_mask_[a.idx] & (j + 1)) != 0)
                                          : p_.rows[a.idx].get(j);
                if (hit) G[row][col] = 1.0;
            }
        }
        return Simplex::maximize(G, h, c).value;
    }

    // With symmetry breaking on, keep only assignments that are
    // lexicographically maximal under the transpositions induced by adjacent
    // equal separation values.
    bool symmetry_canonical(const std::vector<std::int64_t>& x) const {
        for (int i = 1; i < k_; ++i) {
            if (p_.s.at(i - 1) != p_.s.at(i)) continue;
            // swapping message coordinates i and i+1 permutes column bits
            const int bit_a = k_ - i, bit_b = k_ - i - 1;
            for (std::uint32_t j = 1; j <= num_vars_; ++j) {
                std::uint32_t jj = j;
                const bool ba = (j >> bit_a) & 1u, bb = (j >> bit_b) & 1u;
                if (ba != bb)
                    jj = (j ^ (1u << bit_a)) ^ (1u << bit_b);
                if (x[j - 1] != x[jj - 1]) {
                    if (x[j - 1] < x[jj - 1]) return false;
                    break;
                }
            }
        }
        return true;
    }

    // ---- enumeration (index-order DFS, exact-budget pruning) ----

    void enum_rec(std::uint32_t idx, std::int64_t budget,
                  std::vector<std::int64_t>& x,
                  std::vector<std::int64_t>& resid,
                  std::vector<std::int64_t>& in_subset,
                  std::vector<MultiplicityVector>& out) const {
        std::int64_t resid_total = 0;
        for (std::size_t r = 0; r < num_rows_; ++r) {
            if (resid[r] > 0) {
                if (resid[r] > budget) return;
                bool coverable = false;
                for (auto j : row_vars_[r])
                    if (j >= idx) { coverable = true; break; }
                if (!coverable) return;
                resid_total += resid[r];
            }
        }
        const auto ws = static_cast<std::int64_t>(std::ceil(
            double(resid_total) / double(std::int64_t(1) << (k_ - 1)) - 1e-9));
        if (ws > budget) return;
        // each remaining unit contributes at most 1 toward a subset bound
        for (std::size_t t = 0; t < subset_mask_.size(); ++t)
            if (in_subset[t] + budget < subset_lb_[t]) return;
        if (idx == num_vars_) {
            if (budget == 0 && resid_total == 0)
                out.emplace_back(k_, x);
            return;
        }
        const std::int64_t ub = std::min<std::int64_t>(budget, p_.s.back());
        for (std::int64_t v = 0; v <= ub; ++v) {
            x[idx] = v;
            for (auto r : var_rows_[idx]) resid[r] -= v;
            for (std::size_t t = 0; t < subset_mask_.size(); ++t)
                if (subset_mask_[t] & (idx + 1)) in_subset[t] += v;
            enum_rec(idx + 1, budget - v, x, resid, in_subset, out);
            for (auto r : var_rows_[idx]) resid[r] += v;
            for (std::size_t t = 0; t < subset_mask_.size(); ++t)
                if (subset_mask_[t] & (idx + 1)) in_subset[t] -= v;
        }
        x[idx] = 0;
    }

    const IlpProblem& p_;
    SolveConfig cfg_;
    int k_;
    std::uint32_t num_vars_;
    std::size_t num_rows_;
    std::mt19937_64 rng_;

    std::vector<std::vector<std::size_t>> var_rows_;
    std::vector<std::vector<std::uint32_t>> row_vars_;
    std::vector<RowMask> var_rowmask_;
    std::vector<std::uint32_t> subset_mask_;
    std::vector<std::int64_t> subset_lb_;

    std::vector<double> root_primal_;
    std::int64_t root_lb_ = 0;
    std::vector<std::int64_t> best_;
    std::int64_t best_obj_ = 0;

    bool deadline_set_ = false;
    std::chrono::steady_clock::time_point deadline_;
};

} // namespace detail

inline SolveOutcome solve(const IlpProblem& p, const SolveConfig& cfg = {}) {
    detail::IlpSolver solver(p, cfg);
    return solver.solve();
}

inline std::vector<MultiplicityVector> enumerate_optima(const IlpProblem& p,
                                                        const SolveConfig& cfg = {}) {
    SolveConfig c = cfg;
    c.validate();
    if (p.k > c.enumerate_k_limit)
        throw InstanceTooLarge("enumeration refused: k exceeds the configured guard");
    c.symmetry_breaking = false;
    c.time_budget_s = 0.0;
    detail::IlpSolver solver(p, c);
    const auto opt = solver.solve();
    auto all = solver.enumerate(opt.objective);
    std::sort(all.begin(), all.end(),
              [](const MultiplicityVector& a, const MultiplicityVector& b) {
                  return a.values() < b.values();
              });
    return all;
}

inline double node_lower_bound(const IlpProblem& p,
                               const std::vector<std::optional<std::int64_t>>& partial,
                               BoundMethod method = BoundMethod::weighted_sum) {
    detail::IlpSolver solver(p, SolveConfig{});
    return solver.node_bound(partial, method);
}

} // namespace uep
