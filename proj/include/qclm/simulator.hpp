#pragma once

#include <cstdint>
#include <vector>

#include "qclm/code.hpp"
#include "qclm/decoder.hpp"

namespace qclm {

struct SimReport {
    std::uint64_t frames_run = 0;
    std::uint64_t frame_errors = 0;
    std::uint64_t bit_errors = 0;
    double fer = 0.0;
    double ber = 0.0;
    double i_ave = 0.0;  // over cleanly decoded frames, each counted as >= 1 pass
    double wall_time_s = 0.0;
};

// flip exactly t uniformly chosen positions
BitVec mceliece_channel(const BitVec& c, std::uint32_t t, Rng& rng);

// Monte Carlo FER/BER at exact error weight t.  Frames use counter-derived
// rng substreams, so results match bit-for-bit across thread counts.
// threads = 0 picks the hardware concurrency.  cfg.t is set from t.
SimReport run_fer(const QcLdpcCode& code, std::uint32_t t, std::uint64_t frames,
                  const DecoderConfig& cfg, std::uint64_t seed, unsigned threads = 0);

struct SweepPoint {
    std::uint32_t t;
    SimReport report;
};

std::vector<SweepPoint> sweep_fer(const QcLdpcCode& code,
                                  const std::vector<std::uint32_t>& t_values,
                                  std::uint64_t frames, const DecoderConfig& cfg,
                                  std::uint64_t seed, unsigned threads = 0);

}  // namespace qclm
