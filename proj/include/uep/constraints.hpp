#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "uep/bitvec.hpp"
#include "uep/codespec.hpp"

namespace uep {

// k x (2^k - 1) matrix of all nonzero binary k-tuples as columns in
// increasing order, row 1 the most significant bit.
class TupleMatrix {
public:
    explicit TupleMatrix(int k) : k_(k) {
        if (k < 1 || k > kBruteForceKLimit)
            throw SpecError("tuple matrix k out of range");
        const std::uint32_t ncols = (std::uint32_t(1) << k) - 1;
        rows_.assign(static_cast<std::size_t>(k), BitVec(ncols));
        for (std::uint32_t j = 1; j <= ncols; ++j)
            for (int i = 1; i <= k; ++i)
                if (tuple_bit(k, i, j)) rows_[static_cast<std::size_t>(i - 1)].set(j - 1);
    }

    int k() const { return k_; }
    std::uint32_t cols() const { return (std::uint32_t(1) << k_) - 1; }
    const BitVec& row(int i) const { return rows_[static_cast<std::size_t>(i)]; }  // 0-based

private:
    int k_;
    std::vector<BitVec> rows_;
};

inline TupleMatrix tuple_matrix(int k) { return TupleMatrix(k); }

// Row of A for a GF(2) coefficient pattern over {a_1..a_k}. With the
// canonical column ordering, entry j of sum_{i in coeffs} a_i is the parity
// of popcount(mask & j) where mask has bit (k-i) set per coefficient.
inline BitVec combination_row(int k, std::uint32_t coeff_mask) {
    const std::uint32_t ncols = (std::uint32_t(1) << k) - 1;
    BitVec row(ncols);
    for (std::uint32_t j = 1; j <= ncols; ++j)
        if (std::popcount(coeff_mask & j) & 1) row.set(j - 1);
    return row;
}

// Coefficient mask (in column-index space) for the row of block i at
// enumeration position m: a_i plus a_j for every set bit j of m, i and the
// block 1-based, m in 0..2^{i-1}-1 with bit j selecting m_{j+1}.
inline std::uint32_t block_row_mask(int k, int i, std::uint32_t m) {
    std::uint32_t mask = std::uint32_t(1) << (k - i);
    for (int j = 0; j < i - 1; ++j)
        if ((m >> j) & 1) mask |= std::uint32_t(1) << (k - 1 - j);
    return mask;
}

// The 2^{i-1} rows a_i + sum_j m_j a_j of constraint block i (1-based).
inline std::vector<BitVec> constraint_block(const TupleMatrix& Aa, int i) {
    if (i < 1 || i > Aa.k()) throw SpecError("constraint block index out of range");
    std::vector<BitVec> rows;
    const std::uint32_t nrows = std::uint32_t(1) << (i - 1);
    rows.reserve(nrows);
    for (std::uint32_t m = 0; m < nrows; ++m)
        rows.push_back(combination_row(Aa.k(), block_row_mask(Aa.k(), i, m)));
    return rows;
}

// Full ILP instance: minimize sum x_j subject to A x >= b, x >= 0 integer.
// A stacks the blocks A_1..A_k; b repeats s_i over the 2^{i-1} rows of
// block i.
struct IlpProblem {
    int k;
    SeparationVector s;
    std::vector<BitVec> rows;        // 2^k - 1 packed binary rows
    std::vector<int> rhs;            // per-row right-hand side
    std::vector<std::size_t> block_start;  // row index where block i begins (size k+1)

    std::uint32_t num_vars() const { return (std::uint32_t(1) << k) - 1; }
    std::size_t num_rows() const { return rows.size(); }
};

inline IlpProblem assemble(const SeparationVector& s) {
    const int k = s.k();
    TupleMatrix Aa(k);
    IlpProblem p{k, s, {}, {}, {}};
    p.rows.reserve((std::size_t(1) << k) - 1);
    for (int i = 1; i <= k; ++i) {
        p.block_start.push_back(p.rows.size());
        auto block = constraint_block(Aa, i);
        for (auto& r : block) {
            p.rows.push_back(std::move(r));
            p.rhs.push_back(s.at(i - 1));
        }
    }
    p.block_start.push_back(p.rows.size());
    return p;
}

// CPLEX-style LP listing of the instance (variables x1..x{2^k-1}).
inline std::string export_lp(const IlpProblem& p) {
    std::string out = "Minimize\n obj:";
    for (std::uint32_t j = 1; j <= p.num_vars(); ++j) {
        out += (j == 1 ? " x" : " + x") + std::to_string(j);
    }
    out += "\nSubject To\n";
    for (std::size_t r = 0; r < p.num_rows(); ++r) {
        out += " c" + std::to_string(r + 1) + ":";
        bool first = true;
        for (std::uint32_t j = 0; j < p.num_vars(); ++j) {
            if (p.rows[r].get(j)) {
                out += (first ? " x" : " + x") + std::to_string(j + 1);
                first = false;
            }
        }
        out += " >= " + std::to_string(p.rhs[r]) + "\n";
    }
    out += "General\n";
    for (std::uint32_t j = 1; j <= p.num_vars(); ++j)
        out += " x" + std::to_string(j) + "\n";
    out += "End\n";
    return out;
}

} // namespace uep
