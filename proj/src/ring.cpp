#include "qclm/ring.hpp"

#include <stdexcept>

namespace qclm {

namespace {

// variable-degree polynomial over GF(2), little-endian words
struct Gf2Poly {
    std::vector<std::uint64_t> w;

    int degree() const {
        for (std::size_t i = w.size(); i-- > 0;) {
            if (w[i]) return int(i * 64 + 63 - std::countl_zero(w[i]));
        }
        return -1;
    }

    bool get(std::size_t i) const {
        const std::size_t wi = i >> 6;
        return wi < w.size() && ((w[wi] >> (i & 63)) & 1);
    }

    void set(std::size_t i) {
        const std::size_t wi = i >> 6;
        if (wi >= w.size()) w.resize(wi + 1, 0);
        w[wi] |= 1ULL << (i & 63);
    }

    // *this ^= other << shift
    void xor_shifted(const Gf2Poly& other, std::size_t shift) {
        const std::size_t ws = shift >> 6;
        const int bs = int(shift & 63);
        if (other.w.size() + ws + 1 > w.size()) w.resize(other.w.size() + ws + 1, 0);
        if (bs == 0) {
            for (std::size_t i = 0; i < other.w.size(); ++i) w[i + ws] ^= other.w[i];
        } else {
            std::uint64_t carry = 0;
            for (std::size_t i = 0; i < other.w.size(); ++i) {
                w[i + ws] ^= (other.w[i] << bs) | carry;
                carry = other.w[i] >> (64 - bs);
            }
            w[other.w.size() + ws] ^= carry;
        }
    }
};

}  // namespace

RingPoly RingPoly::rotated(std::uint32_t s) const {
    s %= p_;
    if (s == 0) return *this;
    RingPoly out(p_);
    auto src = c_.words();
    auto dst = out.c_.words();
    const std::size_t ws = s >> 6;
    const int bs = int(s & 63);
    const std::size_t nw = src.size();
    // shift left by s across a virtual 2p-bit buffer, then fold bits >= p back
    auto add_word = [&](std::size_t wi, std::uint64_t v) {
        // deposit into the folded [0, 2p) -> [0, p) index space
        std::size_t bitbase = wi * 64;
        if (v == 0) return;
        if (bitbase >= p_) {
            bitbase -= p_;
            // fold: may still straddle the word boundary after subtracting p
            const std::size_t w0 = bitbase >> 6;
            const int off = int(bitbase & 63);
            if (off == 0) {
                dst[w0] ^= v;
            } else {
                dst[w0] ^= v << off;
                if (w0 + 1 < nw)
                    dst[w0 + 1] ^= v >> (64 - off);
                else
                    dst[0] ^= v >> (64 - off);  // wrapped past p again
            }
        } else if (bitbase + 64 > p_) {
            // word straddles p: low part stays, high part folds to the bottom
            const std::uint32_t keep = p_ - std::uint32_t(bitbase);
            dst[wi] ^= v & ((keep == 64) ? ~0ULL : ((1ULL << keep) - 1));
            dst[0] ^= v >> keep;
        } else {
            dst[wi] ^= v;
        }
    };
    std::uint64_t carry = 0;
    for (std::size_t i = 0; i < nw; ++i) {
        const std::uint64_t v = (bs == 0) ? src[i] : ((src[i] << bs) | carry);
        if (bs != 0) carry = src[i] >> (64 - bs);
        add_word(i + ws, v);
    }
    if (bs != 0 && carry) add_word(nw + ws, carry);
    out.c_.mask_top();
    return out;
}

RingPoly operator*(const RingPoly& a, const RingPoly& b) {
    if (a.p_ != b.p_) throw std::invalid_argument("ring modulus mismatch");
    // rotate-accumulate over the sparser operand's support
    const RingPoly& sparse = (a.weight() <= b.weight()) ? a : b;
    const RingPoly& dense = (a.weight() <= b.weight()) ? b : a;
    RingPoly acc(a.p_);
    for (auto e : sparse.support()) acc += dense.rotated(e);
    return acc;
}

RingPoly RingPoly::transposed() const {
    RingPoly out(p_);
    if (c_.get(0)) out.c_.set(0, true);
    for (std::uint32_t i = 1; i < p_; ++i)
        if (c_.get(i)) out.c_.set(p_ - i, true);
    return out;
}

std::optional<RingPoly> RingPoly::inverse() const {
    if (p_ == 0 || is_zero()) return std::nullopt;
    // extended Euclid on (a, x^p + 1): maintain t with t*a = r (mod x^p+1)
    Gf2Poly r0, r1, t0, t1;
    r0.set(0);
    r0.set(p_);
    for (auto e : support()) r1.set(e);
    t1.set(0);
    while (r1.degree() >= 0) {
        if (r0.degree() < r1.degree()) {
            std::swap(r0, r1);
            std::swap(t0, t1);
        }
        const std::size_t shift = std::size_t(r0.degree() - r1.degree());
        r0.xor_shifted(r1, shift);
        t0.xor_shifted(t1, shift);
    }
    if (r0.degree() != 0) return std::nullopt;  // gcd != 1
    RingPoly inv(p_);
    for (std::uint32_t i = 0; i <= std::uint32_t(t0.degree()); ++i)
        if (t0.get(i)) inv.c_.flip(i % p_);
    return inv;
}

}  // namespace qclm
