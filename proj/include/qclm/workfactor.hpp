#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "qclm/params.hpp"

namespace qclm {

struct InfeasibleWeight : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Stern-search cost estimate, log2 domain.  c = 1/P expected iterations;
// P is the per-iteration union bound and may exceed 1 (then c < 1: a fraction
// of one iteration is expected to suffice and p_exceeds_one is set).
struct WorkFactorReport {
    std::uint64_t n_s = 0, k_s = 0;
    std::uint32_t w = 0;
    double a_w = 1.0;
    std::uint32_t g_opt = 0, l_opt = 0;
    double log2_p = 0.0;
    double log2_n = 0.0;
    double log2_c = 0.0;
    double log2_wf = 0.0;
    bool p_exceeds_one = false;
    bool speedup12_applied = false;
};

WorkFactorReport stern_wf(std::uint64_t n_s, std::uint64_t k_s, std::uint32_t w,
                          double a_w, std::uint32_t g_max = 40, std::uint32_t l_max = 64);

// log2 of the per-iteration success probability at a fixed (g, l);
// -infinity when the split is out of domain
double stern_iteration_log2p(std::uint64_t n_s, std::uint64_t k_s, std::uint32_t w,
                             double a_w, std::uint32_t g, std::uint32_t l);

struct DualAttackReport {
    WorkFactorReport wf;          // at w = dc*m, A_w = n-k
    std::uint32_t w_threshold_80;  // smallest row weight pushing WF to 2^80
};

DualAttackReport dual_attack_wf(const SystemParams& params);

// quasi-cyclic shift attack on [G'; shifted ciphertexts], r shifted copies
WorkFactorReport decoding_attack_wf(const SystemParams& params, std::uint32_t r);

struct ShiftScanPoint {
    std::uint32_t r;
    double log2_wf;
};

struct DecodingScan {
    std::vector<ShiftScanPoint> curve;
    WorkFactorReport best;
    std::uint32_t best_r = 0;
};

// minimizes over r in [1, r_max]; full_curve keeps every point (and scans all
// of [1, r_max]) instead of stopping once the minimum has clearly passed
DecodingScan decoding_attack_scan(const SystemParams& params, std::uint32_t r_max = 0,
                                  bool full_curve = false);

struct OtdEstimates {
    double log2_s1 = 0.0;  // support-subset enumeration of g = q*s
    double log2_s2 = 0.0;  // shift-overlap (Hadamard) scan
    double log2_s3 = 0.0;  // low-weight rows of the inverse-block row code
    WorkFactorReport s3_wf;
};

OtdEstimates otd_wf(const SystemParams& params);

// reference point: Stern on the classic (1024,524) instance, t=50 errors
WorkFactorReport original_mceliece_wf();

WorkFactorReport apply_speedup12(WorkFactorReport report);

struct ComplexityReport {
    double c_enc = 0.0, c_dec = 0.0, c_spa = 0.0;
    double c_mul_enc = 0.0, c_mul_xq = 0.0, c_mul_us = 0.0;
    double c_enc_per_bit = 0.0, c_dec_per_bit = 0.0;
    double i_ave = 0.0;
    std::uint32_t q = 0;
    double m_p = 0.0;  // modeled cost of one p-bit circulant product
};

// Cost model: one circulant product costs M(p) = 3.91 * p^(log3 5) binary
// operations (Toom-3 asymptotic with a fitted leading constant).  Decryption
// charges Q and S products at full density: constant-time multiplication must
// not shortcut on secret sparsity.
ComplexityReport complexity_estimate(const SystemParams& params, double i_ave,
                                     std::uint32_t q);

std::uint64_t keysize_bytes(const SystemParams& params);

}  // namespace qclm
