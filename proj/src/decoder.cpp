#include "qclm/decoder.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace qclm {

namespace {
constexpr double kLlrClamp = 25.0;

double clamp_llr(double v) { return std::clamp(v, -kLlrClamp, kLlrClamp); }
}  // namespace

SpaDecoder::SpaDecoder(const QcBlockMatrix& h)
    : n_(h.cols()), m_(h.rows()) {
    const std::uint32_t p = h.modulus();
    std::vector<std::vector<std::uint32_t>> per_check(m_);
    for (std::size_t bj = 0; bj < h.block_cols(); ++bj) {
        for (std::size_t bi = 0; bi < h.block_rows(); ++bi) {
            // row r of the circulant has ones at (a + r) mod p
            const auto rsupp = h.at(bi, bj).support();
            for (std::uint32_t r = 0; r < p; ++r)
                for (auto a : rsupp)
                    per_check[bi * p + r].push_back(std::uint32_t(bj * p + (a + r) % p));
        }
    }
    chk_start_.reserve(m_ + 1);
    chk_start_.push_back(0);
    for (auto& edges : per_check) {
        for (auto v : edges) var_.push_back(v);
        chk_start_.push_back(std::uint32_t(var_.size()));
    }
    std::vector<std::uint32_t> deg(n_, 0);
    for (auto v : var_) ++deg[v];
    var_start_.assign(n_ + 1, 0);
    for (std::size_t v = 0; v < n_; ++v) var_start_[v + 1] = var_start_[v] + deg[v];
    var_edges_.resize(var_.size());
    std::vector<std::uint32_t> cursor(var_start_.begin(), var_start_.end() - 1);
    for (std::uint32_t e = 0; e < var_.size(); ++e) var_edges_[cursor[var_[e]]++] = e;
    v2c_.resize(var_.size());
    c2v_.resize(var_.size());
    total_.resize(n_);
    hard_.resize(n_);
}

bool SpaDecoder::syndrome_clear(const std::vector<std::uint8_t>& hard) const {
    for (std::size_t c = 0; c < m_; ++c) {
        std::uint8_t parity = 0;
        for (std::uint32_t e = chk_start_[c]; e < chk_start_[c + 1]; ++e)
            parity ^= hard[var_[e]];
        if (parity) return false;
    }
    return true;
}

DecodeOutcome SpaDecoder::decode(const BitVec& received, const DecoderConfig& cfg) {
    if (received.size() != n_) throw std::invalid_argument("received length mismatch");
    if (cfg.max_iterations < 1) throw std::invalid_argument("max_iterations must be >= 1");
    if (cfg.t > n_) throw std::invalid_argument("error count above code length");

    const double rho = double(cfg.t) / double(n_);
    const double llr0 = (cfg.t == 0) ? kLlrClamp : clamp_llr(std::log((1.0 - rho) / rho));

    auto quantize = [&](double v) {
        if (!cfg.quant_bits) return v;
        const double step = std::ldexp(1.0, -cfg.quant_frac);
        const double lim = double((1 << (*cfg.quant_bits - 1)) - 1) * step;
        return std::clamp(std::nearbyint(v / step) * step, -lim, lim);
    };

    std::vector<double> channel(n_);
    for (std::size_t v = 0; v < n_; ++v)
        channel[v] = quantize(received.get(v) ? -llr0 : llr0);

    for (std::size_t v = 0; v < n_; ++v)
        for (std::uint32_t k = var_start_[v]; k < var_start_[v + 1]; ++k)
            v2c_[var_edges_[k]] = channel[v];

    for (std::size_t v = 0; v < n_; ++v) hard_[v] = received.get(v);
    if (cfg.early_stop && syndrome_clear(hard_)) {
        BitVec cw(n_);
        for (std::size_t v = 0; v < n_; ++v)
            if (hard_[v]) cw.set(v, true);
        return {std::move(cw), 0, true};
    }

    std::vector<double> fwd, bwd;
    DecodeOutcome out;
    for (int iter = 1; iter <= cfg.max_iterations; ++iter) {
        // check update: exclusive products of tanh(v2c/2) via forward/backward scans
        for (std::size_t c = 0; c < m_; ++c) {
            const std::uint32_t lo = chk_start_[c], hi = chk_start_[c + 1];
            const std::size_t deg = hi - lo;
            fwd.resize(deg + 1);
            bwd.resize(deg + 1);
            fwd[0] = 1.0;
            bwd[deg] = 1.0;
            for (std::size_t i = 0; i < deg; ++i)
                fwd[i + 1] = fwd[i] * std::tanh(0.5 * v2c_[lo + i]);
            for (std::size_t i = deg; i-- > 0;)
                bwd[i] = bwd[i + 1] * std::tanh(0.5 * v2c_[lo + i]);
            for (std::size_t i = 0; i < deg; ++i) {
                const double prod = std::clamp(fwd[i] * bwd[i + 1], -0.9999999999999999, 0.9999999999999999);
                c2v_[lo + i] = quantize(2.0 * std::atanh(prod));
            }
        }
        // variable update
        for (std::size_t v = 0; v < n_; ++v) {
            double sum = channel[v];
            for (std::uint32_t k = var_start_[v]; k < var_start_[v + 1]; ++k)
                sum += c2v_[var_edges_[k]];
            total_[v] = sum;
            for (std::uint32_t k = var_start_[v]; k < var_start_[v + 1]; ++k) {
                const std::uint32_t e = var_edges_[k];
                v2c_[e] = quantize(clamp_llr(sum - c2v_[e]));
            }
            // ties resolve toward the received bit
            hard_[v] = (sum < 0.0) ? 1 : (sum > 0.0 ? 0 : received.get(v));
        }
        out.iterations_used = iter;
        if (cfg.early_stop && syndrome_clear(hard_)) {
            out.success = true;
            break;
        }
    }
    if (!cfg.early_stop) out.success = syndrome_clear(hard_);

    BitVec cw(n_);
    for (std::size_t v = 0; v < n_; ++v)
        if (hard_[v]) cw.set(v, true);
    out.codeword = std::move(cw);
    return out;
}

}  // namespace qclm
