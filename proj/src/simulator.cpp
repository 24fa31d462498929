#include "qclm/simulator.hpp"

#include <algorithm>
#include <chrono>
#include <stdexcept>
#include <thread>

namespace qclm {

BitVec mceliece_channel(const BitVec& c, std::uint32_t t, Rng& rng) {
    if (t > c.size()) throw std::invalid_argument("mceliece_channel: t > n");
    BitVec y = c;
    y ^= random_error(c.size(), t, rng);
    return y;
}

namespace {

struct Tally {
    std::uint64_t frame_errors = 0;
    std::uint64_t bit_errors = 0;
    std::uint64_t iter_sum = 0;  // over clean frames
    std::uint64_t clean = 0;
};

Tally run_stripe(const QcLdpcCode& code, SpaDecoder& dec, std::uint32_t t,
                 std::uint64_t frames, const DecoderConfig& cfg, std::uint64_t seed,
                 std::uint64_t first, std::uint64_t stride) {
    Tally tally;
    const std::size_t k = code.params.k();
    for (std::uint64_t f = first; f < frames; f += stride) {
        Rng rng = Rng::substream(seed, f);
        const BitVec u = BitVec::random(k, rng);
        const BitVec c = code.g.left_mul(u);
        const BitVec y = mceliece_channel(c, t, rng);
        const DecodeOutcome out = dec.decode(y, cfg);
        if (out.success && out.codeword == c) {
            ++tally.clean;
            tally.iter_sum += std::max(out.iterations_used, 1);
        } else {
            ++tally.frame_errors;
            BitVec diff = out.codeword;
            diff ^= c;
            tally.bit_errors += diff.weight();
        }
    }
    return tally;
}

}  // namespace

SimReport run_fer(const QcLdpcCode& code, std::uint32_t t, std::uint64_t frames,
                  const DecoderConfig& cfg, std::uint64_t seed, unsigned threads) {
    if (frames < 1) throw std::invalid_argument("run_fer: frames must be >= 1");
    DecoderConfig fcfg = cfg;
    fcfg.t = t;

    if (threads == 0)
        threads = std::clamp(std::thread::hardware_concurrency(), 1u, 32u);
    if (frames < threads * 4) threads = 1;

    const auto start = std::chrono::steady_clock::now();
    std::vector<Tally> parts(threads);
    if (threads == 1) {
        SpaDecoder dec(code.h);
        parts[0] = run_stripe(code, dec, t, frames, fcfg, seed, 0, 1);
    } else {
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < threads; ++w) {
            pool.emplace_back([&, w] {
                SpaDecoder dec(code.h);
                parts[w] = run_stripe(code, dec, t, frames, fcfg, seed, w, threads);
            });
        }
        for (auto& th : pool) th.join();
    }

    Tally sum;
    for (const auto& part : parts) {
        sum.frame_errors += part.frame_errors;
        sum.bit_errors += part.bit_errors;
        sum.iter_sum += part.iter_sum;
        sum.clean += part.clean;
    }

    SimReport rep;
    rep.frames_run = frames;
    rep.frame_errors = sum.frame_errors;
    rep.bit_errors = sum.bit_errors;
    rep.fer = double(sum.frame_errors) / double(frames);
    rep.ber = double(sum.bit_errors) / (double(frames) * double(code.params.n()));
    rep.i_ave = sum.clean ? double(sum.iter_sum) / double(sum.clean) : 0.0;
    rep.wall_time_s =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return rep;
}

std::vector<SweepPoint> sweep_fer(const QcLdpcCode& code,
                                  const std::vector<std::uint32_t>& t_values,
                                  std::uint64_t frames, const DecoderConfig& cfg,
                                  std::uint64_t seed, unsigned threads) {
    std::vector<SweepPoint> out;
    out.reserve(t_values.size());
    for (auto t : t_values) out.push_back({t, run_fer(code, t, frames, cfg, seed, threads)});
    return out;
}

}  // namespace qclm
