#include "qclm/mceliece.hpp"

#include <stdexcept>

namespace qclm {

namespace {

// random nonnegative integer matrix with all row and column sums equal to m,
// via the configuration model: pair up row and column stubs at random
std::vector<std::uint32_t> block_weight_assignment(std::uint32_t n0, std::uint32_t m,
                                                   Rng& rng) {
    std::vector<std::uint32_t> col_stubs;
    col_stubs.reserve(std::size_t(n0) * m);
    for (std::uint32_t j = 0; j < n0; ++j)
        for (std::uint32_t r = 0; r < m; ++r) col_stubs.push_back(j);
    rng.shuffle(col_stubs);
    std::vector<std::uint32_t> w(std::size_t(n0) * n0, 0);
    std::size_t idx = 0;
    for (std::uint32_t i = 0; i < n0; ++i)
        for (std::uint32_t r = 0; r < m; ++r) ++w[i * n0 + col_stubs[idx++]];
    return w;
}

struct Scrambler {
    QcBlockMatrix mat;
    QcBlockMatrix inv;
};

Scrambler sample_s(const SystemParams& params, KeyVariant variant, Rng& rng) {
    const std::uint32_t k0 = params.k0();
    for (int attempt = 0; attempt < 256; ++attempt) {
        QcBlockMatrix s(params.p, k0, k0);
        if (variant == KeyVariant::weak_otd) {
            // non-null blocks of weight m on the densest occupancy that can be
            // invertible: for p a power of two a circulant is a unit exactly
            // when its weight is odd, so the all-occupied grid reduces to the
            // singular all-ones matrix; clearing k0-1 cells on a partial
            // diagonal fixes the rank, and row/column shuffles spread the holes
            std::vector<std::uint8_t> occupied(std::size_t(k0) * k0, 1);
            std::vector<std::uint32_t> rp(k0), cp(k0);
            for (std::uint32_t i = 0; i < k0; ++i) rp[i] = cp[i] = i;
            rng.shuffle(rp);
            rng.shuffle(cp);
            for (std::uint32_t d = 0; d + 1 < k0; ++d) occupied[rp[d] * k0 + cp[d]] = 0;
            for (std::uint32_t i = 0; i < k0; ++i)
                for (std::uint32_t j = 0; j < k0; ++j)
                    if (occupied[i * k0 + j])
                        s.at(i, j) = RingPoly::random_weight(params.p, params.m, rng);
        } else {
            for (std::uint32_t i = 0; i < k0; ++i)
                for (std::uint32_t j = 0; j < k0; ++j)
                    s.at(i, j) = RingPoly::random(params.p, rng);
        }
        if (auto inv = s.inverse()) return {std::move(s), std::move(*inv)};
    }
    throw SamplingExhausted("scrambler sampling kept producing singular matrices");
}

Scrambler sample_q(const SystemParams& params, KeyVariant variant, Rng& rng) {
    const std::uint32_t n0 = params.n0;
    const std::uint32_t p = params.p;
    for (int attempt = 0; attempt < 256; ++attempt) {
        QcBlockMatrix q(p, n0, n0);
        switch (variant) {
            case KeyVariant::hardened: {
                const auto w = block_weight_assignment(n0, params.m, rng);
                for (std::uint32_t i = 0; i < n0; ++i)
                    for (std::uint32_t j = 0; j < n0; ++j)
                        if (w[i * n0 + j])
                            q.at(i, j) = RingPoly::random_weight(p, w[i * n0 + j], rng);
                break;
            }
            case KeyVariant::weak_otd:
                for (std::uint32_t i = 0; i < n0; ++i)
                    q.at(i, i) = RingPoly::random_weight(p, params.m, rng);
                break;
            case KeyVariant::permutation: {
                std::vector<std::uint32_t> perm(n0);
                for (std::uint32_t i = 0; i < n0; ++i) perm[i] = i;
                rng.shuffle(perm);
                for (std::uint32_t i = 0; i < n0; ++i)
                    q.at(i, perm[i]) = RingPoly::monomial(p, std::uint32_t(rng.below(p)));
                break;
            }
        }
        if (auto inv = q.inverse()) return {std::move(q), std::move(*inv)};
    }
    throw SamplingExhausted("error-spreader sampling kept producing singular matrices");
}

}  // namespace

KeyPair keygen(const SystemParams& params_in, KeyVariant variant, Rng& rng) {
    SystemParams params = params_in;
    if (variant == KeyVariant::permutation) params.m = 1;  // Q is a permutation
    params.validate();
    QcLdpcCode code = make_code(params, rng);
    Scrambler s = sample_s(params, variant, rng);
    Scrambler q = sample_q(params, variant, rng);
    QcBlockMatrix g_pub = s.inv * code.g * q.inv;
    PrivateKey priv{params, variant, std::move(code.h), std::move(code.g),
                    std::move(s.mat), std::move(q.mat)};
    PublicKey pub{params, variant, std::move(g_pub)};
    return {std::move(priv), std::move(pub)};
}

BitVec encrypt_with_error(const PublicKey& pk, const BitVec& u, const BitVec& e) {
    if (u.size() != pk.params.k()) throw std::invalid_argument("message length mismatch");
    if (e.size() != pk.params.n()) throw std::invalid_argument("error length mismatch");
    BitVec x = pk.g_pub.left_mul(u);
    x ^= e;
    return x;
}

BitVec encrypt(const PublicKey& pk, const BitVec& u, Rng& rng) {
    const BitVec e = random_error(pk.params.n(), pk.params.t_prime, rng);
    return encrypt_with_error(pk, u, e);
}

std::optional<BitVec> decrypt(const PrivateKey& sk, const BitVec& x) {
    if (x.size() != sk.params.n()) throw std::invalid_argument("ciphertext length mismatch");
    const BitVec xq = sk.q.left_mul(x);
    SpaDecoder decoder(sk.h);
    DecoderConfig cfg;
    cfg.t = sk.params.t();
    DecodeOutcome outcome = decoder.decode(xq, cfg);
    if (!outcome.success) return std::nullopt;
    const BitVec u_prime = outcome.codeword.slice(0, sk.params.k());
    return sk.s.left_mul(u_prime);
}

std::size_t error_amplification(const PrivateKey& sk, const BitVec& e) {
    return sk.q.left_mul(e).weight();
}

}  // namespace qclm
