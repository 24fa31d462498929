#include "doctest.h"
#include "qclm/ring.hpp"

using namespace qclm;

namespace {

RingPoly poly(std::uint32_t p, std::initializer_list<std::uint32_t> exps) {
    std::vector<std::uint32_t> v(exps);
    return RingPoly::from_support(p, v);
}

}  // namespace

TEST_CASE("ring product, p=7 worked example") {
    // (1+x)(1+x+x^3) = 1 + x^2 + x^3 + x^4
    const RingPoly a = poly(7, {0, 1});
    const RingPoly b = poly(7, {0, 1, 3});
    CHECK((a * b).support() == std::vector<std::uint32_t>{0, 2, 3, 4});
    CHECK(a * b == b * a);
}

TEST_CASE("monomial product wraps at p") {
    CHECK(RingPoly::monomial(7, 6).rotated(2) == RingPoly::monomial(7, 1));
    CHECK(RingPoly::monomial(8, 5) * RingPoly::monomial(8, 5) == RingPoly::monomial(8, 2));
}

TEST_CASE("rotation round trip and identity") {
    Rng rng(7);
    for (std::uint32_t p : {2u, 7u, 64u, 65u, 127u, 128u}) {
        const RingPoly a = RingPoly::random(p, rng);
        CHECK(a.rotated(0) == a);
        for (std::uint32_t s : {1u, p / 2, p - 1})
            CHECK(a.rotated(s).rotated(p - s) == a);
        CHECK(a * RingPoly::one(p) == a);
    }
}

TEST_CASE("transpose reverses exponents") {
    const RingPoly a = poly(7, {1, 3});
    CHECK(a.transposed().support() == std::vector<std::uint32_t>{4, 6});
    CHECK(poly(7, {0}).transposed() == poly(7, {0}));
    Rng rng(3);
    for (int i = 0; i < 20; ++i) {
        const RingPoly x = RingPoly::random(32, rng), y = RingPoly::random(32, rng);
        CHECK((x * y).transposed() == x.transposed() * y.transposed());
        CHECK(x.transposed().transposed() == x);
    }
}

TEST_CASE("inverse, p=4 worked example") {
    const RingPoly a = poly(4, {0, 1, 2});
    auto inv = a.inverse();
    REQUIRE(inv.has_value());
    CHECK(inv->support() == std::vector<std::uint32_t>{0, 2, 3});
    CHECK(*inv * a == RingPoly::one(4));
}

TEST_CASE("even weight is singular when p is a power of two") {
    CHECK_FALSE(poly(4, {0, 1}).inverse().has_value());
    CHECK_FALSE(poly(16, {0, 3, 5, 9}).inverse().has_value());
    CHECK_FALSE(RingPoly::zero(8).inverse().has_value());
}

TEST_CASE("random odd-weight polynomials invert") {
    Rng rng(11);
    for (std::uint32_t p : {8u, 16u, 32u, 64u}) {
        for (int i = 0; i < 25; ++i) {
            const RingPoly a = RingPoly::random_weight(p, 3 + 2 * (i % 3), rng);
            auto inv = a.inverse();
            REQUIRE(inv.has_value());
            CHECK(*inv * a == RingPoly::one(p));
        }
    }
}

TEST_CASE("hadamard keeps the support intersection") {
    const RingPoly a = poly(8, {0, 2, 5});
    const RingPoly b = poly(8, {2, 5, 6});
    CHECK(hadamard(a, b).support() == std::vector<std::uint32_t>{2, 5});
}

TEST_CASE("random_weight draws the exact weight") {
    Rng rng(5);
    for (int i = 0; i < 10; ++i) CHECK(RingPoly::random_weight(97, 13, rng).weight() == 13);
}
