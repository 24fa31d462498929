// Acceptance gate: one criterion per --criterion N (1..12), all when omitted.
// Prints one PASS/FAIL line per criterion; exit 0 only when every run passed.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <iomanip>
#include <iostream>
#include <string>
#include <vector>

#include "qclm/attacks.hpp"
#include "qclm/keyfile.hpp"
#include "qclm/simulator.hpp"
#include "qclm/workfactor.hpp"

using namespace qclm;

namespace {

bool approx(double v, double target, double tol) { return std::fabs(v - target) <= tol; }

bool is_shift_of(const RingPoly& a, const RingPoly& b) {
    if (a.modulus() != b.modulus() || a.weight() != b.weight()) return false;
    for (std::uint32_t s = 0; s < a.modulus(); ++s)
        if (b.rotated(s) == a) return true;
    return false;
}

bool matches_s_row(const std::vector<RingPoly>& cand, const QcBlockMatrix& s, std::uint32_t i) {
    if (cand.size() != s.block_cols()) return false;
    for (std::uint32_t shift = 0; shift < s.modulus(); ++shift) {
        bool all = true;
        for (std::size_t j = 0; j < cand.size() && all; ++j)
            all = cand[j] == s.at(i, j).rotated(shift);
        if (all) return true;
    }
    return false;
}

double elapsed_s(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// 1. dual-code work factors 2^153 / 2^250 / 2^340 (+/-1) and 80-bit row-weight
//    thresholds 179 / 127 / 124 (+/-1)
bool crit1() {
    const double wf_target[3] = {153.0, 250.0, 340.0};
    const int thr_target[3] = {179, 127, 124};
    bool ok = true;
    for (int sys = 1; sys <= 3; ++sys) {
        const DualAttackReport rep = dual_attack_wf(SystemParams::preset(sys));
        const bool wf_ok = approx(rep.wf.log2_wf, wf_target[sys - 1], 1.0);
        const bool thr_ok =
            std::abs(int(rep.w_threshold_80) - thr_target[sys - 1]) <= 1;
        std::cout << "  system " << sys << ": log2 WF = " << std::fixed
                  << std::setprecision(3) << rep.wf.log2_wf << " (target "
                  << wf_target[sys - 1] << " +/-1), w threshold = " << rep.w_threshold_80
                  << " (target " << thr_target[sys - 1] << " +/-1)\n";
        ok = ok && wf_ok && thr_ok;
    }
    return ok;
}

// 2. decoding-attack scan minima 2^65.6 / 2^75.8 / 2^106.5 (+/-1)
bool crit2() {
    const double target[3] = {65.6, 75.8, 106.5};
    bool ok = true;
    for (int sys = 1; sys <= 3; ++sys) {
        const DecodingScan scan = decoding_attack_scan(SystemParams::preset(sys));
        std::cout << "  system " << sys << ": min log2 WF = " << std::fixed
                  << std::setprecision(3) << scan.best.log2_wf << " at r = "
                  << scan.best_r << " (target " << target[sys - 1] << " +/-1)\n";
        ok = ok && approx(scan.best.log2_wf, target[sys - 1], 1.0);
    }
    return ok;
}

// 3. classic (1024,524), t=50 instance: 2^63.5 +/- 0.5
bool crit3() {
    const WorkFactorReport rep = original_mceliece_wf();
    std::cout << "  log2 WF = " << std::fixed << std::setprecision(3) << rep.log2_wf
              << " (target 63.5 +/-0.5), g = " << rep.g_opt << ", l = " << rep.l_opt
              << "\n";
    return approx(rep.log2_wf, 63.5, 0.5);
}

// 4. OTD strategy costs for system 1: 2^50.3 / 2^36 / 2^32 (+/-2)
bool crit4() {
    const OtdEstimates est = otd_wf(SystemParams::preset(1));
    std::cout << "  strategy 1: 2^" << std::fixed << std::setprecision(3) << est.log2_s1
              << " (target 50.3 +/-2)\n";
    std::cout << "  strategy 2: 2^" << est.log2_s2 << " (target 36 +/-2)\n";
    std::cout << "  strategy 3: 2^" << est.log2_s3 << " (target 32 +/-2)"
              << (est.s3_wf.p_exceeds_one ? " [P>1, cost below one iteration]" : "")
              << "\n";
    return approx(est.log2_s1, 50.3, 2.0) && approx(est.log2_s2, 36.0, 2.0) &&
           approx(est.log2_s3, 32.0, 2.0);
}

// 5. serialized public key payloads exactly 6144 / 6144 / 12288 bytes
bool crit5() {
    const std::size_t target[3] = {6144, 6144, 12288};
    bool ok = true;
    for (int sys = 1; sys <= 3; ++sys) {
        const SystemParams params = SystemParams::preset(sys);
        Rng rng(40 + sys);
        const KeyPair kp = keygen(params, KeyVariant::hardened, rng);
        const std::size_t payload = serialize_public(kp.pub).size() - kKeyHeaderBytes;
        std::cout << "  system " << sys << ": payload = " << payload << " bytes (target "
                  << target[sys - 1] << ")\n";
        ok = ok && payload == target[sys - 1] && payload == public_payload_bytes(params) &&
             payload == keysize_bytes(params);
    }
    return ok;
}

// 6. 100 seeded encrypt/decrypt round trips per system, all exact, under 10 min
bool crit6() {
    const auto t0 = std::chrono::steady_clock::now();
    bool ok = true;
    for (int sys = 1; sys <= 3; ++sys) {
        const SystemParams params = SystemParams::preset(sys);
        Rng rng(60 + sys);
        const KeyPair kp = keygen(params, KeyVariant::hardened, rng);
        int good = 0;
        for (int trial = 0; trial < 100; ++trial) {
            const BitVec u = BitVec::random(params.k(), rng);
            const BitVec x = encrypt(kp.pub, u, rng);
            const auto back = decrypt(kp.priv, x);
            if (back && *back == u) ++good;
        }
        std::cout << "  system " << sys << ": " << good << "/100 round trips\n";
        ok = ok && good == 100;
    }
    const double secs = elapsed_s(t0);
    std::cout << "  wall time " << std::fixed << std::setprecision(1) << secs
              << " s (budget 600)\n";
    return ok && secs < 600.0;
}

// 7. Gpub (H Q^T)^T = 0 for every variant and preset
bool crit7() {
    bool ok = true;
    for (int sys = 1; sys <= 3; ++sys) {
        for (KeyVariant variant :
             {KeyVariant::hardened, KeyVariant::weak_otd, KeyVariant::permutation}) {
            Rng rng(80 + sys * 4 + int(variant));
            const KeyPair kp = keygen(SystemParams::preset(sys), variant, rng);
            const QcBlockMatrix hq = kp.priv.h * kp.priv.q.transposed();
            const std::size_t wt = (kp.pub.g_pub * hq.transposed()).total_weight();
            std::cout << "  system " << sys << " variant " << int(variant)
                      << ": residual weight " << wt << "\n";
            ok = ok && wt == 0;
        }
    }
    return ok;
}

// 8. system 1 at t = 189: zero frame errors across 1000 frames
bool crit8() {
    Rng rng(8);
    const QcLdpcCode code = make_code(SystemParams::preset(1), rng);
    const SimReport rep = run_fer(code, 189, 1000, DecoderConfig{}, 2024, 0);
    std::cout << "  frame errors " << rep.frame_errors << "/" << rep.frames_run
              << ", I_ave = " << std::fixed << std::setprecision(2) << rep.i_ave
              << ", wall " << std::setprecision(1) << rep.wall_time_s << " s\n";
    return rep.frame_errors == 0;
}

// 9. toy-scale executable attacks: OTD strategies on weak vs hardened keys,
//    dual-code break of the permutation variant, decoding attack recovery
bool crit9() {
    const SystemParams toy = SystemParams::toy();
    int otd1_hits = 0, otd2_hits = 0, otd3_hits = 0;
    for (int sd = 0; sd < 20; ++sd) {
        Rng rng(500 + sd);
        const KeyPair kp = keygen(toy, KeyVariant::weak_otd, rng);
        for (const auto& cand : otd_strategy1(kp.pub)) {
            if (is_shift_of(cand.q, kp.priv.q.at(cand.block_row, cand.block_row))) {
                ++otd1_hits;
                break;
            }
        }
        for (const auto& cand : otd_strategy2(kp.pub)) {
            if (is_shift_of(cand.q, kp.priv.q.at(cand.block_row, cand.block_row))) {
                ++otd2_hits;
                break;
            }
        }
        SternConfig s3cfg;
        s3cfg.max_iterations = 500;
        s3cfg.seed = 900 + sd;
        s3cfg.stop_after = 4;
        for (const auto& cand : otd_strategy3(kp.pub, s3cfg)) {
            if (matches_s_row(cand.s_row, kp.priv.s, cand.block_row)) {
                ++otd3_hits;
                break;
            }
        }
    }
    std::cout << "  weak keys: otd1 " << otd1_hits << "/20, otd2 " << otd2_hits
              << "/20, otd3 " << otd3_hits << "/20 (need >= 18 each)\n";

    int hardened_clean = 0;
    for (int sd = 0; sd < 20; ++sd) {
        Rng rng(550 + sd);
        const KeyPair kp = keygen(toy, KeyVariant::hardened, rng);
        SternConfig s3cfg;
        s3cfg.max_iterations = 300;
        s3cfg.seed = 950 + sd;
        const bool empty = otd_strategy1(kp.pub).empty() && otd_strategy2(kp.pub).empty() &&
                           otd_strategy3(kp.pub, s3cfg).empty();
        if (empty) ++hardened_clean;
    }
    std::cout << "  hardened keys silent: " << hardened_clean << "/20 (need 20)\n";

    int dual_ok = 0;
    for (int sd = 0; sd < 5; ++sd) {
        Rng rng(700 + sd);
        const KeyPair kp = keygen(toy, KeyVariant::permutation, rng);
        SternConfig dcfg;
        dcfg.max_iterations = 2000;
        dcfg.seed = 60 + sd;
        dcfg.stop_after = 2;
        const DualAttackResult dual = dual_code_attack(kp.pub, dcfg);
        const BitVec u = BitVec::random(toy.k(), rng);
        const BitVec x = encrypt(kp.pub, u, rng);
        for (const auto& row : dual.rows) {
            const auto got = decode_with_dual_row(kp.pub, row, x);
            if (got && *got == u) {
                ++dual_ok;
                break;
            }
        }
    }
    std::cout << "  dual-code end-to-end breaks: " << dual_ok << "/5 (need >= 1)\n";

    int decode_ok = 0;
    for (int sd = 0; sd < 5; ++sd) {
        Rng rng(750 + sd);
        const KeyPair kp = keygen(toy, KeyVariant::hardened, rng);
        const BitVec u = BitVec::random(toy.k(), rng);
        const BitVec e = random_error(toy.n(), toy.t_prime, rng);
        const BitVec x = encrypt_with_error(kp.pub, u, e);
        SternConfig scfg;
        scfg.max_iterations = 3000;
        scfg.seed = 70 + sd;
        const auto res = decoding_attack(kp.pub, x, 8, scfg);
        if (res && res->u == u && res->e == e) ++decode_ok;
    }
    std::cout << "  decoding-attack recoveries: " << decode_ok << "/5 (need >= 4)\n";

    return otd1_hits >= 18 && otd2_hits >= 18 && otd3_hits >= 18 && hardened_clean == 20 &&
           dual_ok >= 1 && decode_ok >= 4;
}

// 10. per-iteration success probability of the executable Stern search matches
//     the analyzer on a random (20,10) code within 3 standard errors
bool crit10() {
    DenseMatrix gen;
    std::uint32_t dmin = 0;
    std::uint64_t code_seed = 0;
    for (std::uint64_t sd = 1; sd < 1000 && code_seed == 0; ++sd) {
        Rng rng(sd);
        DenseMatrix g = DenseMatrix::random(10, 20, rng);
        if (g.rank() != 10) continue;
        std::uint32_t best = 21;
        std::uint64_t mult = 0;
        for (std::uint32_t u = 1; u < 1024; ++u) {
            BitVec uv(10);
            for (int b = 0; b < 10; ++b)
                if ((u >> b) & 1) uv.set(b, true);
            const std::uint32_t wt = std::uint32_t(g.left_mul(uv).weight());
            if (wt < best) {
                best = wt;
                mult = 1;
            } else if (wt == best) {
                ++mult;
            }
        }
        if (mult == 1 && best >= 4 && best <= 8) {
            gen = g;
            dmin = best;
            code_seed = sd;
        }
    }
    if (code_seed == 0) {
        std::cout << "  no qualifying code found\n";
        return false;
    }
    const double log2p = stern_iteration_log2p(20, 10, dmin, 1.0, 1, 2);
    const double p = std::exp2(log2p);
    SternConfig cfg;
    cfg.g = 1;
    cfg.l = 2;
    cfg.max_iterations = 10000;
    cfg.seed = 42;
    const std::uint64_t hits = stern_success_count(gen, dmin, cfg);
    const double expected = 10000.0 * p;
    const double sigma = std::sqrt(10000.0 * p * (1.0 - p));
    std::cout << "  code seed " << code_seed << ", unique minimum weight " << dmin
              << "\n  observed " << hits << " successes, expected " << std::fixed
              << std::setprecision(1) << expected << " +/- " << 3.0 * sigma
              << " (3 sigma)\n";
    return std::fabs(double(hits) - expected) <= 3.0 * sigma;
}

// 11. circulant algebra vs dense GF(2) oracles, 1000 random cases with p <= 32
bool crit11() {
    Rng rng(2026);
    int bad = 0;
    for (int trial = 0; trial < 1000; ++trial) {
        const std::uint32_t p = 2 + std::uint32_t(rng.below(31));
        const RingPoly a = RingPoly::random(p, rng);
        const RingPoly b = RingPoly::random(p, rng);
        const auto dense_of = [p](const RingPoly& poly) {
            QcBlockMatrix m(p, 1, 1);
            m.at(0, 0) = poly;
            return m.to_dense();
        };
        const DenseMatrix da = dense_of(a);
        const DenseMatrix db = dense_of(b);

        if (dense_of(a * b) != da * db) ++bad;
        if (dense_of(a.transposed()) != da.transposed()) ++bad;
        const std::uint32_t s = std::uint32_t(rng.below(p));
        if (dense_of(a.rotated(s)) != dense_of(RingPoly::monomial(p, s)) * da) ++bad;

        const auto inv = a.inverse();
        const auto dinv = da.inverse();
        if (inv.has_value() != dinv.has_value()) {
            ++bad;
        } else if (inv && dense_of(*inv) * da != DenseMatrix::identity(p)) {
            ++bad;
        }

        QcBlockMatrix qc(p, 2, 3);
        for (std::size_t i = 0; i < 2; ++i)
            for (std::size_t j = 0; j < 3; ++j) qc.at(i, j) = RingPoly::random(p, rng);
        const BitVec v = BitVec::random(2 * p, rng);
        if (qc.left_mul(v) != qc.to_dense().left_mul(v)) ++bad;
        const auto back = QcBlockMatrix::from_dense(qc.to_dense(), p);
        if (!back || !(*back == qc)) ++bad;
    }
    std::cout << "  mismatches: " << bad << "/1000 cases\n";
    return bad == 0;
}

// 12. per-bit complexity: measured I_ave, q = 6 quantizer; targets 658/4678,
//     776/8901, 1070/12903 binary ops per information bit, +/-30%
bool crit12() {
    const double enc_target[3] = {658.0, 776.0, 1070.0};
    const double dec_target[3] = {4678.0, 8901.0, 12903.0};
    bool ok = true;
    for (int sys = 1; sys <= 3; ++sys) {
        const SystemParams params = SystemParams::preset(sys);
        Rng rng(900 + sys);
        const QcLdpcCode code = make_code(params, rng);
        DecoderConfig dcfg;
        dcfg.quant_bits = 6;
        dcfg.quant_frac = 1;
        const SimReport rep = run_fer(code, params.t(), 200, dcfg, 77, 0);
        const ComplexityReport comp = complexity_estimate(params, rep.i_ave, 6);
        const double enc_ratio = comp.c_enc_per_bit / enc_target[sys - 1];
        const double dec_ratio = comp.c_dec_per_bit / dec_target[sys - 1];
        const bool enc_ok = enc_ratio >= 0.7 && enc_ratio <= 1.3;
        const bool dec_ok = dec_ratio >= 0.7 && dec_ratio <= 1.3;
        std::cout << "  system " << sys << ": I_ave = " << std::fixed
                  << std::setprecision(2) << rep.i_ave << " (" << rep.frame_errors
                  << " frame errors), enc/bit = " << std::setprecision(0)
                  << comp.c_enc_per_bit << " vs " << enc_target[sys - 1] << " ("
                  << std::setprecision(2) << enc_ratio << "x, "
                  << (enc_ok ? "ok" : "OUT") << "), dec/bit = " << std::setprecision(0)
                  << comp.c_dec_per_bit << " vs " << dec_target[sys - 1] << " ("
                  << std::setprecision(2) << dec_ratio << "x, "
                  << (dec_ok ? "ok" : "OUT") << ")\n";
        ok = ok && enc_ok && dec_ok;
    }
    return ok;
}

struct Criterion {
    int id;
    const char* label;
    bool (*run)();
};

const Criterion kCriteria[] = {
    {1, "dual-code work factors and 80-bit thresholds", crit1},
    {2, "decoding-attack scan minima", crit2},
    {3, "classic (1024,524) reference work factor", crit3},
    {4, "OTD strategy cost estimates", crit4},
    {5, "public key payload sizes", crit5},
    {6, "encrypt/decrypt round trips", crit6},
    {7, "public/private key structural invariant", crit7},
    {8, "system 1 operating point, 1000 frames", crit8},
    {9, "toy-scale executable attacks", crit9},
    {10, "Stern per-iteration probability model", crit10},
    {11, "circulant-vs-dense oracle equivalence", crit11},
    {12, "complexity model with measured iteration counts", crit12},
};

}  // namespace

int main(int argc, char** argv) {
    int only = 0;
    for (int i = 1; i < argc; ++i) {
        const std::string arg = argv[i];
        if (arg == "--criterion" && i + 1 < argc) {
            only = std::atoi(argv[++i]);
        } else {
            std::cerr << "usage: acceptance [--criterion N]\n";
            return 2;
        }
    }
    if (only < 0 || only > 12) {
        std::cerr << "criterion must be in 1..12\n";
        return 2;
    }
    bool all_ok = true;
    for (const auto& crit : kCriteria) {
        if (only != 0 && crit.id != only) continue;
        bool ok = false;
        try {
            ok = crit.run();
        } catch (const std::exception& ex) {
            std::cout << "  exception: " << ex.what() << "\n";
        }
        std::cout << "C" << crit.id << " " << (ok ? "PASS" : "FAIL") << " " << crit.label
                  << "\n";
        all_ok = all_ok && ok;
    }
    return all_ok ? 0 : 1;
}
