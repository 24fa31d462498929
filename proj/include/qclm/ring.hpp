#pragma once

#include <cstdint>
#include <optional>
#include <span>

#include "qclm/bitvec.hpp"

namespace qclm {

// Element of GF(2)[x]/(x^p + 1), the first row of a p x p binary circulant.
// Row r of the circulant is this polynomial rotated right by r positions.
class RingPoly {
public:
    RingPoly() : p_(0) {}
    explicit RingPoly(std::uint32_t p) : p_(p), c_(p) {}

    static RingPoly zero(std::uint32_t p) { return RingPoly(p); }

    static RingPoly one(std::uint32_t p) {
        RingPoly r(p);
        r.c_.set(0, true);
        return r;
    }

    static RingPoly monomial(std::uint32_t p, std::uint32_t e) {
        RingPoly r(p);
        r.c_.set(e % p, true);
        return r;
    }

    static RingPoly from_support(std::uint32_t p, std::span<const std::uint32_t> exps) {
        RingPoly r(p);
        for (auto e : exps) r.c_.set(e % p, true);
        return r;
    }

    static RingPoly random(std::uint32_t p, Rng& rng) {
        RingPoly r(p);
        r.c_ = BitVec::random(p, rng);
        return r;
    }

    static RingPoly random_weight(std::uint32_t p, std::uint32_t w, Rng& rng) {
        RingPoly r(p);
        for (auto e : rng.distinct(w, p)) r.c_.set(e, true);
        return r;
    }

    std::uint32_t modulus() const { return p_; }
    std::size_t weight() const { return c_.weight(); }
    bool is_zero() const { return !c_.any(); }
    bool coeff(std::uint32_t i) const { return c_.get(i); }
    void set_coeff(std::uint32_t i, bool v) { c_.set(i, v); }
    std::vector<std::uint32_t> support() const { return c_.support(); }
    const BitVec& coeffs() const { return c_; }
    BitVec& coeffs() { return c_; }

    bool operator==(const RingPoly&) const = default;

    RingPoly& operator+=(const RingPoly& o) {
        c_ ^= o.c_;
        return *this;
    }
    friend RingPoly operator+(RingPoly a, const RingPoly& b) { return a += b; }

    // multiply by x^s: coefficient i moves to (i + s) mod p
    RingPoly rotated(std::uint32_t s) const;

    friend RingPoly operator*(const RingPoly& a, const RingPoly& b);

    // coefficient i -> coefficient (p - i) mod p; transpose of the circulant
    RingPoly transposed() const;

    // Hadamard (coefficient-wise AND)
    friend RingPoly hadamard(const RingPoly& a, const RingPoly& b) {
        RingPoly r = a;
        r.c_ &= b.c_;
        return r;
    }

    // inverse mod x^p + 1 via extended Euclid; empty when gcd != 1
    std::optional<RingPoly> inverse() const;

private:
    std::uint32_t p_;
    BitVec c_;
};

}  // namespace qclm
