#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "uep/bitvec.hpp"

namespace uep {

class SpecError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Thrown when an exhaustive computation is asked for an instance above its
// configured size guard.
class InstanceTooLarge : public SpecError {
public:
    using SpecError::SpecError;
};

inline constexpr int kBruteForceKLimit = 20;

// Per-receiver error-correction requirement t = (t_1, ..., t_k),
// non-decreasing.
class ProtectionProfile {
public:
    explicit ProtectionProfile(std::vector<int> t) : t_(std::move(t)) {
        if (t_.empty())
            throw SpecError("protection profile must have length >= 1");
        for (std::size_t i = 0; i < t_.size(); ++i) {
            if (t_[i] < 0)
                throw SpecError("protection requirement must be nonnegative");
            if (i > 0 && t_[i] < t_[i - 1])
                throw SpecError("protection profile must be non-decreasing");
        }
    }

    int k() const { return static_cast<int>(t_.size()); }
    int at(int i) const { return t_[static_cast<std::size_t>(i)]; }  // 0-based
    const std::vector<int>& values() const { return t_; }

private:
    std::vector<int> t_;
};

// Separation vector s = (s_1, ..., s_k), positive and non-decreasing.
class SeparationVector {
public:
    explicit SeparationVector(std::vector<int> s) : s_(std::move(s)) {
        if (s_.empty())
            throw SpecError("separation vector must have length >= 1");
        for (std::size_t i = 0; i < s_.size(); ++i) {
            if (s_[i] < 1)
                throw SpecError("separation vector entries must be >= 1");
            if (i > 0 && s_[i] < s_[i - 1])
                throw SpecError("separation vector must be non-decreasing");
        }
    }

    // Measured separation of an arbitrary matrix: entries may be zero (a
    // vanishing row) or non-monotone, so only non-emptiness is enforced.
    static SeparationVector measured(std::vector<int> s) {
        if (s.empty())
            throw SpecError("separation vector must have length >= 1");
        SeparationVector out;
        out.s_ = std::move(s);
        return out;
    }

    int k() const { return static_cast<int>(s_.size()); }
    int at(int i) const { return s_[static_cast<std::size_t>(i)]; }  // 0-based
    int back() const { return s_.back(); }
    const std::vector<int>& values() const { return s_; }

    friend bool operator==(const SeparationVector&, const SeparationVector&) = default;

private:
    SeparationVector() = default;
    std::vector<int> s_;
};

// Minimal separation vector achieving profile t: s_i = 2 t_i + 1.
inline SeparationVector separation_from_protection(const ProtectionProfile& t) {
    std::vector<int> s(static_cast<std::size_t>(t.k()));
    for (int i = 0; i < t.k(); ++i)
        s[static_cast<std::size_t>(i)] = 2 * t.at(i) + 1;
    return SeparationVector(std::move(s));
}

// Column multiplicities x = (x_1, ..., x_{2^k-1}): how many times the j-th
// nonzero k-tuple appears as a column of the generator matrix.
class MultiplicityVector {
public:
    MultiplicityVector(int k, std::vector<std::int64_t> x)
        : k_(k), x_(std::move(x)) {
        if (k < 1 || k > kBruteForceKLimit)
            throw SpecError("message length k out of range");
        if (x_.size() != (std::size_t(1) << k) - 1)
            throw SpecError("multiplicity vector must have length 2^k - 1");
        for (auto v : x_)
            if (v < 0) throw SpecError("multiplicities must be nonnegative");
    }

    int k() const { return k_; }
    std::int64_t at(std::size_t j) const { return x_[j]; }  // 0-based: column j+1
    const std::vector<std::int64_t>& values() const { return x_; }
    std::int64_t length() const {
        return std::accumulate(x_.begin(), x_.end(), std::int64_t(0));
    }

    friend bool operator==(const MultiplicityVector&, const MultiplicityVector&) = default;
    friend auto operator<=>(const MultiplicityVector& a, const MultiplicityVector& b) {
        return a.x_ <=> b.x_;
    }

private:
    int k_;
    std::vector<std::int64_t> x_;
};

// k x n binary generator matrix in canonical form: columns grouped by tuple
// index, tuple j repeated x_j times, increasing j. Column tuples are read
// top-to-bottom as the binary expansion of j with row 1 the most significant
// bit.
class GeneratorMatrix {
public:
    GeneratorMatrix(int k, std::vector<BitVec> rows, std::vector<std::int64_t> x)
        : k_(k), rows_(std::move(rows)), x_(std::move(x)) {}

    int k() const { return k_; }
    std::size_t n() const { return rows_.empty() ? 0 : rows_[0].size(); }
    const BitVec& row(int i) const { return rows_[static_cast<std::size_t>(i)]; }
    const std::vector<std::int64_t>& multiplicities() const { return x_; }

    // 0/1 matrix, one row per line
    std::string to_text() const {
        std::string out;
        for (int i = 0; i < k_; ++i) {
            for (std::size_t c = 0; c < n(); ++c)
                out += row(i).get(c) ? '1' : '0';
            out += '\n';
        }
        return out;
    }

private:
    int k_;
    std::vector<BitVec> rows_;
    std::vector<std::int64_t> x_;
};

// a_{i,j} for the canonical tuple ordering: bit (k-i) of column index j,
// with i, j both 1-based.
inline bool tuple_bit(int k, int i, std::uint32_t j) {
    return (j >> (k - i)) & 1u;
}

inline GeneratorMatrix build_generator(const MultiplicityVector& x) {
    const std::int64_t n = x.length();
    if (n < 1) throw SpecError("all-zero multiplicity vector gives an empty code");
    const int k = x.k();
    std::vector<BitVec> rows(static_cast<std::size_t>(k),
                             BitVec(static_cast<std::size_t>(n)));
    std::size_t col = 0;
    const std::uint32_t ncols = (std::uint32_t(1) << k) - 1;
    for (std::uint32_t j = 1; j <= ncols; ++j) {
        for (std::int64_t rep = 0; rep < x.at(j - 1); ++rep, ++col)
            for (int i = 1; i <= k; ++i)
                if (tuple_bit(k, i, j)) rows[static_cast<std::size_t>(i - 1)].set(col);
    }
    return GeneratorMatrix(k, std::move(rows), x.values());
}

// Builds a generator matrix from explicit columns (each a k-tuple value in
// 1..2^k-1, arbitrary order) and canonicalizes.
inline GeneratorMatrix generator_from_columns(int k, const std::vector<std::uint32_t>& cols) {
    std::vector<std::int64_t> x((std::size_t(1) << k) - 1, 0);
    for (auto c : cols) {
        if (c < 1 || c >= (std::uint32_t(1) << k))
            throw SpecError("column value out of range (all-zero columns not representable)");
        ++x[c - 1];
    }
    return build_generator(MultiplicityVector(k, std::move(x)));
}

// Separation vector of G by exhaustive codeword enumeration (Gray-code sweep
// over the 2^k - 1 nonzero messages).
inline SeparationVector separation_vector(const GeneratorMatrix& G,
                                          int k_limit = kBruteForceKLimit) {
    const int k = G.k();
    if (k > k_limit)
        throw InstanceTooLarge("instance too large for brute-force separation");
    std::vector<std::int64_t> best(static_cast<std::size_t>(k), -1);
    BitVec codeword(G.n());
    std::uint32_t gray = 0;
    const std::uint32_t total = (std::uint32_t(1) << k) - 1;
    for (std::uint32_t g = 1; g <= total; ++g) {
        std::uint32_t next = g ^ (g >> 1);
        std::uint32_t flipped = gray ^ next;  // single bit
        codeword ^= G.row(std::countr_zero(flipped));
        gray = next;
        const auto w = static_cast<std::int64_t>(codeword.popcount());
        std::uint32_t m = gray;
        while (m) {
            const int i = std::countr_zero(m);
            m &= m - 1;
            auto& b = best[static_cast<std::size_t>(i)];
            if (b < 0 || w < b) b = w;
        }
    }
    std::vector<int> s(best.begin(), best.end());
    return SeparationVector::measured(std::move(s));
}

// true iff shat_i >= s_i for all i
inline bool dominates(const SeparationVector& shat, const SeparationVector& s) {
    if (shat.k() != s.k()) throw SpecError("separation vector length mismatch");
    for (int i = 0; i < s.k(); ++i)
        if (shat.at(i) < s.at(i)) return false;
    return true;
}

} // namespace uep
