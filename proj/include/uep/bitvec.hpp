#pragma once

#include <bit>
#include <cstdint>
#include <cstddef>
#include <vector>

namespace uep {

// Fixed-length bit vector packed into 64-bit words. Bit i of the vector is
// bit (i % 64) of word (i / 64).
class BitVec {
public:
    BitVec() = default;
    explicit BitVec(std::size_t nbits)
        : nbits_(nbits), words_((nbits + 63) / 64, 0) {}

    std::size_t size() const { return nbits_; }

    bool get(std::size_t i) const {
        return (words_[i >> 6] >> (i & 63)) & 1u;
    }
    void set(std::size_t i, bool v = true) {
        if (v) words_[i >> 6] |= std::uint64_t(1) << (i & 63);
        else   words_[i >> 6] &= ~(std::uint64_t(1) << (i & 63));
    }

    std::size_t popcount() const {
        std::size_t c = 0;
        for (auto w : words_) c += std::popcount(w);
        return c;
    }

    // popcount(*this AND other); both must have equal length
    std::size_t and_popcount(const BitVec& other) const {
        std::size_t c = 0;
        for (std::size_t i = 0; i < words_.size(); ++i)
            c += std::popcount(words_[i] & other.words_[i]);
        return c;
    }

    BitVec& operator^=(const BitVec& other) {
        for (std::size_t i = 0; i < words_.size(); ++i)
            words_[i] ^= other.words_[i];
        return *this;
    }

    friend bool operator==(const BitVec&, const BitVec&) = default;

    const std::vector<std::uint64_t>& words() const { return words_; }

private:
    std::size_t nbits_ = 0;
    std::vector<std::uint64_t> words_;
};

} // namespace uep
