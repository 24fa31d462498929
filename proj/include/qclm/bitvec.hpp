#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "qclm/rng.hpp"

namespace qclm {

// Bit vector packed into 64-bit words, bit i at word i/64, bit i%64.
class BitVec {
public:
    BitVec() : n_(0) {}
    explicit BitVec(std::size_t n) : n_(n), w_((n + 63) / 64, 0) {}

    static BitVec random(std::size_t n, Rng& rng) {
        BitVec v(n);
        for (auto& word : v.w_) word = rng.next();
        v.mask_top();
        return v;
    }

    std::size_t size() const { return n_; }

    bool get(std::size_t i) const { return (w_[i >> 6] >> (i & 63)) & 1; }

    void set(std::size_t i, bool v) {
        const std::uint64_t m = 1ULL << (i & 63);
        if (v)
            w_[i >> 6] |= m;
        else
            w_[i >> 6] &= ~m;
    }

    void flip(std::size_t i) { w_[i >> 6] ^= 1ULL << (i & 63); }

    std::size_t weight() const {
        std::size_t c = 0;
        for (auto word : w_) c += std::popcount(word);
        return c;
    }

    bool any() const {
        for (auto word : w_)
            if (word) return true;
        return false;
    }

    void clear() {
        for (auto& word : w_) word = 0;
    }

    BitVec& operator^=(const BitVec& o) {
        if (o.n_ != n_) throw std::invalid_argument("bitvec size mismatch");
        for (std::size_t i = 0; i < w_.size(); ++i) w_[i] ^= o.w_[i];
        return *this;
    }

    BitVec& operator&=(const BitVec& o) {
        if (o.n_ != n_) throw std::invalid_argument("bitvec size mismatch");
        for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
        return *this;
    }

    friend BitVec operator^(BitVec a, const BitVec& b) { return a ^= b; }
    friend BitVec operator&(BitVec a, const BitVec& b) { return a &= b; }

    bool operator==(const BitVec&) const = default;

    std::vector<std::uint32_t> support() const {
        std::vector<std::uint32_t> out;
        for (std::size_t wi = 0; wi < w_.size(); ++wi) {
            std::uint64_t word = w_[wi];
            while (word) {
                out.push_back(std::uint32_t(wi * 64 + std::countr_zero(word)));
                word &= word - 1;
            }
        }
        return out;
    }

    std::span<const std::uint64_t> words() const { return w_; }
    std::span<std::uint64_t> words() { return w_; }

    // zero any bits beyond size() in the top word
    void mask_top() {
        if (n_ & 63) w_.back() &= (1ULL << (n_ & 63)) - 1;
    }

    // copy [at, at+len) into a fresh vector
    BitVec slice(std::size_t at, std::size_t len) const {
        BitVec out(len);
        if ((at & 63) == 0 && (len & 63) == 0) {
            for (std::size_t k = 0; k < len / 64; ++k) out.w_[k] = w_[at / 64 + k];
        } else {
            for (std::size_t i = 0; i < len; ++i)
                if (get(at + i)) out.set(i, true);
        }
        return out;
    }

    void paste(std::size_t at, const BitVec& src) {
        if ((at & 63) == 0 && (src.n_ & 63) == 0) {
            for (std::size_t k = 0; k < src.w_.size(); ++k) w_[at / 64 + k] = src.w_[k];
        } else {
            for (std::size_t i = 0; i < src.size(); ++i) set(at + i, src.get(i));
        }
    }

private:
    std::size_t n_;
    std::vector<std::uint64_t> w_;
};

// exact-weight error pattern over [0, n)
inline BitVec random_error(std::size_t n, std::uint32_t t, Rng& rng) {
    BitVec e(n);
    for (auto pos : rng.distinct(t, std::uint32_t(n))) e.set(pos, true);
    return e;
}

}  // namespace qclm
