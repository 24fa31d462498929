#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "qclm/params.hpp"
#include "qclm/qc.hpp"
#include "qclm/rng.hpp"

namespace qclm {

// rejection sampling ran out of retries; callers may rerun with another seed
struct SamplingExhausted : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Supports of the n0 circulant blocks of H; all pairwise differences within a
// block are distinct across the whole family, which rules out length-4 cycles.
struct DifferenceFamily {
    std::uint32_t p = 0;
    std::vector<std::vector<std::uint32_t>> sets;
};

DifferenceFamily sample_difference_family(std::uint32_t n0, std::uint32_t dv,
                                          std::uint32_t p, Rng& rng);

bool check_disjoint_differences(const DifferenceFamily& df);

QcBlockMatrix build_parity_check(const DifferenceFamily& df);

// G = [I | (H_last^-1 H_i)^T], needs the last block of H invertible
std::optional<QcBlockMatrix> derive_generator(const QcBlockMatrix& h);

// direct structural check on the dense expansion (small p only)
bool has_no_length4_cycles(const QcBlockMatrix& h);

struct QcLdpcCode {
    SystemParams params;
    QcBlockMatrix h;  // 1 x n0 blocks
    QcBlockMatrix g;  // k0 x n0 blocks, systematic
};

// sample a family until the generator exists
QcLdpcCode make_code(const SystemParams& params, Rng& rng);

// syndrome H * v^T through block transposes
BitVec syndrome(const QcBlockMatrix& h, const BitVec& v);

}  // namespace qclm
