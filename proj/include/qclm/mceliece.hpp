#pragma once

#include <cstdint>
#include <optional>

#include "qclm/code.hpp"
#include "qclm/decoder.hpp"
#include "qclm/params.hpp"

namespace qclm {

enum class KeyVariant : std::uint8_t {
    hardened = 0,     // dense S, spread Q with row/column weight m
    weak_otd = 1,     // weight-m S blocks, block-diagonal Q
    permutation = 2,  // Q a block permutation of monomials (m = 1), dense S
};

struct PrivateKey {
    SystemParams params;
    KeyVariant variant = KeyVariant::hardened;
    QcBlockMatrix h;  // 1 x n0
    QcBlockMatrix g;  // k0 x n0, systematic
    QcBlockMatrix s;  // k0 x k0
    QcBlockMatrix q;  // n0 x n0
};

struct PublicKey {
    SystemParams params;
    KeyVariant variant = KeyVariant::hardened;
    QcBlockMatrix g_pub;  // k0 x n0 = S^-1 G Q^-1
};

struct KeyPair {
    PrivateKey priv;
    PublicKey pub;
};

KeyPair keygen(const SystemParams& params, KeyVariant variant, Rng& rng);

// x = u G' + e with weight(e) = t'
BitVec encrypt(const PublicKey& pk, const BitVec& u, Rng& rng);
BitVec encrypt_with_error(const PublicKey& pk, const BitVec& u, const BitVec& e);

// empty on decoder failure
std::optional<BitVec> decrypt(const PrivateKey& sk, const BitVec& x);

// weight of e*Q, the error load the secret decoder actually sees
std::size_t error_amplification(const PrivateKey& sk, const BitVec& e);

}  // namespace qclm
