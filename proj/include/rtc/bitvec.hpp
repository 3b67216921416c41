// bitvec.hpp -- fixed-width dynamic bit vector used for relation rows and subsets.

#pragma once

#include <cassert>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace rtc {

/// A bit vector of fixed width. Bits beyond the width are kept zero, so
/// equality and ordering can compare raw words.
class BitVec {
public:
    BitVec() = default;

    explicit BitVec(std::size_t nbits)
        : nbits_(nbits), words_((nbits + 63) / 64, 0) {}

    static BitVec ones(std::size_t nbits) {
        BitVec v(nbits);
        for (auto& w : v.words_) w = ~std::uint64_t{0};
        v.mask_tail();
        return v;
    }

    std::size_t size() const { return nbits_; }

    bool test(std::size_t i) const {
        assert(i < nbits_);
        return (words_[i / 64] >> (i % 64)) & 1u;
    }

    void set(std::size_t i, bool value = true) {
        assert(i < nbits_);
        if (value)
            words_[i / 64] |= std::uint64_t{1} << (i % 64);
        else
            words_[i / 64] &= ~(std::uint64_t{1} << (i % 64));
    }

    void clear() {
        for (auto& w : words_) w = 0;
    }

    BitVec& operator|=(const BitVec& o) {
        assert(nbits_ == o.nbits_);
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
        return *this;
    }

    BitVec& operator&=(const BitVec& o) {
        assert(nbits_ == o.nbits_);
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
        return *this;
    }

    friend BitVec operator|(BitVec a, const BitVec& b) { return a |= b; }
    friend BitVec operator&(BitVec a, const BitVec& b) { return a &= b; }

    bool subset_of(const BitVec& o) const {
        assert(nbits_ == o.nbits_);
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & ~o.words_[i]) return false;
        return true;
    }

    bool any() const {
        for (auto w : words_)
            if (w) return true;
        return false;
    }

    bool none() const { return !any(); }

    std::size_t count() const {
        std::size_t n = 0;
        for (auto w : words_) n += static_cast<std::size_t>(__builtin_popcountll(w));
        return n;
    }

    template <class F>
    void for_each_set(F fn) const {
        for (std::size_t wi = 0; wi < words_.size(); ++wi) {
            std::uint64_t w = words_[wi];
            while (w) {
                const int b = __builtin_ctzll(w);
                fn(wi * 64 + static_cast<std::size_t>(b));
                w &= w - 1;
            }
        }
    }

    // Low 64 bits as a mask; enough for the exhaustive sweeps, which stay
    // well under 64 elements.
    std::uint64_t low_word() const { return words_.empty() ? 0 : words_[0]; }

    static BitVec from_mask(std::size_t nbits, std::uint64_t mask) {
        assert(nbits <= 64);
        BitVec v(nbits);
        if (!v.words_.empty()) v.words_[0] = mask;
        v.mask_tail();
        return v;
    }

    bool operator==(const BitVec&) const = default;
    auto operator<=>(const BitVec&) const = default;

private:
    void mask_tail() {
        const std::size_t rem = nbits_ % 64;
        if (rem != 0 && !words_.empty()) words_.back() &= (~std::uint64_t{0}) >> (64 - rem);
    }

    std::size_t nbits_ = 0;
    std::vector<std::uint64_t> words_;
};

} // namespace rtc
