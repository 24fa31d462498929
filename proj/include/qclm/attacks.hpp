#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "qclm/mceliece.hpp"
#include "qclm/stern.hpp"

namespace qclm {

struct DualAttackResult {
    std::vector<BitVec> rows;  // dual codewords: weight <= dc*m, Gpub r^T = 0
    std::uint64_t iterations_run = 0;
};

// Stern search on the dual of the public code at weight dc*m
DualAttackResult dual_code_attack(const PublicKey& pk, const SternConfig& cfg);

// rebuild a quasi-cyclic parity check from one recovered dual row, decode the
// intercepted ciphertext with it and solve for the plaintext
std::optional<BitVec> decode_with_dual_row(const PublicKey& pk, const BitVec& dual_row,
                                           const BitVec& x);

struct ExtendedCode {
    DenseMatrix gen;  // rows of Gpub plus r block-shifted copies of x
    std::uint32_t r = 0;
};

ExtendedCode build_extended_code(const PublicKey& pk, const BitVec& x, std::uint32_t r);

struct DecodingAttackResult {
    BitVec e;             // recovered error pattern, weight t'
    BitVec u;             // plaintext with u Gpub + e = x
    std::uint32_t shift;  // which shifted copy the found codeword was
};

// low-weight codeword search in the extended code; empty when the budget runs
// out without a verified candidate
std::optional<DecodingAttackResult> decoding_attack(const PublicKey& pk, const BitVec& x,
                                                    std::uint32_t r, const SternConfig& cfg);

// blocks g_ij of the inverse of the first k columns of Gpub (the OTD entry
// point); empty when that submatrix is singular
std::optional<QcBlockMatrix> public_left_inverse(const PublicKey& pk);

struct OtdPolyCandidate {
    std::uint32_t block_row = 0;
    RingPoly q;  // some shift x^l q_i on weak keys
};

// enumerate weight-m subsets of the support of g_i0; a subset polynomial d is
// accepted when d^-1 g_ij has weight exactly m for every j
std::vector<OtdPolyCandidate> otd_strategy1(const PublicKey& pk,
                                            std::uint64_t tuple_budget = 1000000);

// intersect g_i0 with each of its p-1 shifts and keep weight-m intersections,
// validated the same way
std::vector<OtdPolyCandidate> otd_strategy2(const PublicKey& pk);

struct OtdRowCandidate {
    std::uint32_t block_row = 0;
    std::vector<RingPoly> s_row;  // matches [S_i0 ... S_i,k0-1] up to a shift
};

// Stern search for weight m(n0-1) codewords in the code spanned by a
// normalized block row of the inverse
std::vector<OtdRowCandidate> otd_strategy3(const PublicKey& pk, const SternConfig& cfg);

// solve u * gen = target; empty when target is outside the row space
std::optional<BitVec> solve_in_row_space(const DenseMatrix& gen, const BitVec& target);

}  // namespace qclm
