#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "qclm/code.hpp"

namespace qclm {

struct DecoderConfig {
    int max_iterations = 100;
    std::uint32_t t = 0;     // expected channel errors, sets the initial likelihoods
    bool early_stop = true;  // stop once the syndrome clears
    // optional uniform saturating message quantizer: quant_bits total bits,
    // quant_frac of them fractional (step 2^-frac, range +/-(2^(bits-1)-1)*step)
    std::optional<int> quant_bits;
    int quant_frac = 1;
};

struct DecodeOutcome {
    BitVec codeword;  // final hard decision; satisfies every check iff success
    int iterations_used = 0;
    bool success = false;
};

// Flooding-schedule sum-product decoder over the exact-weight error channel.
// Instances hold per-decode scratch; use one instance per thread.
class SpaDecoder {
public:
    explicit SpaDecoder(const QcBlockMatrix& h);

    DecodeOutcome decode(const BitVec& received, const DecoderConfig& cfg);

    std::size_t n() const { return n_; }
    std::size_t checks() const { return m_; }

private:
    bool syndrome_clear(const std::vector<std::uint8_t>& hard) const;

    std::size_t n_, m_;
    // edges grouped by check; edge e couples check chk_[e] with variable var_[e]
    std::vector<std::uint32_t> var_;
    std::vector<std::uint32_t> chk_start_;
    // the same edges grouped by variable, as indices into the check-major arrays
    std::vector<std::uint32_t> var_start_;
    std::vector<std::uint32_t> var_edges_;
    // scratch
    std::vector<double> v2c_, c2v_, total_;
    std::vector<std::uint8_t> hard_;
};

}  // namespace qclm
