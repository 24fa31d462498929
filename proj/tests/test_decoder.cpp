#include "doctest.h"
#include "qclm/decoder.hpp"

using namespace qclm;

namespace {

QcLdpcCode toy_code(std::uint64_t seed = 42) {
    Rng rng(seed);
    return make_code(SystemParams::toy(), rng);
}

}  // namespace

TEST_CASE("clean codeword decodes in zero iterations") {
    const QcLdpcCode code = toy_code();
    SpaDecoder dec(code.h);
    Rng rng(1);
    const BitVec c = code.g.left_mul(BitVec::random(code.params.k(), rng));
    DecoderConfig cfg;
    cfg.t = 6;
    const DecodeOutcome out = dec.decode(c, cfg);
    CHECK(out.success);
    CHECK(out.iterations_used == 0);
    CHECK(out.codeword == c);
}

TEST_CASE("single flipped bit is corrected") {
    const QcLdpcCode code = toy_code();
    SpaDecoder dec(code.h);
    Rng rng(2);
    DecoderConfig cfg;
    cfg.t = 1;
    for (int trial = 0; trial < 20; ++trial) {
        const BitVec c = code.g.left_mul(BitVec::random(code.params.k(), rng));
        BitVec y = c;
        y.flip(rng.below(code.params.n()));
        const DecodeOutcome out = dec.decode(y, cfg);
        CHECK(out.success);
        CHECK(out.codeword == c);
    }
}

TEST_CASE("nominal toy error load decodes nearly always") {
    const QcLdpcCode code = toy_code();
    SpaDecoder dec(code.h);
    Rng rng(3);
    DecoderConfig cfg;
    cfg.t = 6;  // t' * m at toy scale
    int good = 0;
    for (int trial = 0; trial < 50; ++trial) {
        const BitVec c = code.g.left_mul(BitVec::random(code.params.k(), rng));
        BitVec y = c;
        y ^= random_error(code.params.n(), 6, rng);
        const DecodeOutcome out = dec.decode(y, cfg);
        if (out.success && out.codeword == c) ++good;
    }
    CHECK(good >= 45);
}

TEST_CASE("overload reports failure") {
    const QcLdpcCode code = toy_code();
    SpaDecoder dec(code.h);
    Rng rng(4);
    DecoderConfig cfg;
    cfg.t = 80;
    cfg.max_iterations = 30;
    int failed = 0;
    for (int trial = 0; trial < 10; ++trial) {
        const BitVec c = code.g.left_mul(BitVec::random(code.params.k(), rng));
        BitVec y = c;
        y ^= random_error(code.params.n(), 80, rng);
        const DecodeOutcome out = dec.decode(y, cfg);
        if (!out.success || out.codeword != c) ++failed;
    }
    CHECK(failed == 10);
}

TEST_CASE("quantized decoder still corrects the nominal load") {
    const QcLdpcCode code = toy_code();
    SpaDecoder dec(code.h);
    Rng rng(5);
    DecoderConfig cfg;
    cfg.t = 6;
    cfg.quant_bits = 6;
    cfg.quant_frac = 1;
    int good = 0;
    for (int trial = 0; trial < 50; ++trial) {
        const BitVec c = code.g.left_mul(BitVec::random(code.params.k(), rng));
        BitVec y = c;
        y ^= random_error(code.params.n(), 6, rng);
        const DecodeOutcome out = dec.decode(y, cfg);
        if (out.success && out.codeword == c) ++good;
    }
    CHECK(good >= 40);
}

TEST_CASE("early-stop off still validates by final syndrome") {
    const QcLdpcCode code = toy_code();
    SpaDecoder dec(code.h);
    Rng rng(6);
    DecoderConfig cfg;
    cfg.t = 2;
    cfg.early_stop = false;
    cfg.max_iterations = 20;
    const BitVec c = code.g.left_mul(BitVec::random(code.params.k(), rng));
    BitVec y = c;
    y ^= random_error(code.params.n(), 2, rng);
    const DecodeOutcome out = dec.decode(y, cfg);
    CHECK(out.success);
    CHECK(out.codeword == c);
    CHECK(out.iterations_used == 20);
}

TEST_CASE("bad inputs are rejected") {
    const QcLdpcCode code = toy_code();
    SpaDecoder dec(code.h);
    DecoderConfig cfg;
    CHECK_THROWS_AS(dec.decode(BitVec(10), cfg), std::invalid_argument);
    cfg.t = 10000;
    CHECK_THROWS_AS(dec.decode(BitVec(code.params.n()), cfg), std::invalid_argument);
}
