#pragma once

#include <cstdint>
#include <vector>

#include "qclm/dense.hpp"
#include "qclm/rng.hpp"

namespace qclm {

struct SternConfig {
    std::uint32_t g = 2;              // rows combined per half
    std::uint32_t l = 16;             // collision window bits (<= 64)
    std::uint64_t max_iterations = 1000;
    std::uint64_t seed = 1;
    std::size_t stop_after = 1;       // found codewords before returning early
    std::uint32_t info_set_retries = 1000;  // resamples until the k columns invert
};

struct SternResult {
    std::vector<BitVec> codewords;  // distinct, weight <= w, nonzero
    std::uint64_t iterations_run = 0;
    std::uint64_t collisions_checked = 0;
};

// Stern's low-weight-codeword search on the code generated by gen.
// Each iteration draws two disjoint information-set halves and an l-column
// window, then matches g-row combinations from each half that agree on the
// window and weighs the combined codeword.
SternResult stern_search(const DenseMatrix& gen, std::uint32_t w, const SternConfig& cfg);

// per-iteration success data for validating the analyzer's probability model:
// runs iterations without early stop and counts iterations that expose at
// least one weight<=w codeword
std::uint64_t stern_success_count(const DenseMatrix& gen, std::uint32_t w,
                                  const SternConfig& cfg);

}  // namespace qclm
