#include <cmath>
#include <cstdint>
#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "qclm/attacks.hpp"
#include "qclm/keyfile.hpp"
#include "qclm/mceliece.hpp"
#include "qclm/simulator.hpp"
#include "qclm/workfactor.hpp"

using nlohmann::json;
using namespace qclm;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitBadParams = 2;
constexpr int kExitSamplingExhausted = 3;
constexpr int kExitDecodeFailure = 4;
constexpr int kExitNotFound = 5;

std::uint64_t parse_seed(const std::string& hex) {
    std::string s = hex;
    if (s.rfind("0x", 0) == 0 || s.rfind("0X", 0) == 0) s = s.substr(2);
    if (s.empty() || s.size() > 16 ||
        s.find_first_not_of("0123456789abcdefABCDEF") != std::string::npos)
        throw std::invalid_argument("seed must be 1-16 hex digits");
    return std::stoull(s, nullptr, 16);
}

struct ParamArgs {
    std::string system = "custom";
    std::uint32_t n0 = 0, dv = 0, p = 0, m = 0, tprime = 0;
    bool toy = false;

    SystemParams resolve(bool default_toy) const {
        if (system == "1" || system == "2" || system == "3")
            return SystemParams::preset(system[0] - '0');
        if (system == "toy" || toy) return SystemParams::toy();
        if (system != "custom") throw std::invalid_argument("unknown system " + system);
        if (n0 == 0 && default_toy) return SystemParams::toy();
        SystemParams pr{n0, dv, p, m, tprime};
        pr.validate();
        return pr;
    }
};

void add_param_flags(CLI::App* cmd, ParamArgs& args, bool with_toy) {
    cmd->add_option("--system", args.system, "1|2|3|custom parameter set");
    cmd->add_option("--n0", args.n0, "circulant blocks per row");
    cmd->add_option("--dv", args.dv, "column weight");
    cmd->add_option("--p", args.p, "circulant size");
    cmd->add_option("--m", args.m, "error-spread weight");
    cmd->add_option("--tprime", args.tprime, "intentional error weight");
    if (with_toy) cmd->add_flag("--toy-params", args.toy, "use the toy demo parameters");
}

KeyVariant parse_variant(const std::string& name) {
    if (name == "hardened") return KeyVariant::hardened;
    if (name == "weak-otd") return KeyVariant::weak_otd;
    if (name == "permutation") return KeyVariant::permutation;
    throw std::invalid_argument("unknown variant " + name);
}

const char* variant_name(KeyVariant v) {
    switch (v) {
        case KeyVariant::hardened: return "hardened";
        case KeyVariant::weak_otd: return "weak-otd";
        case KeyVariant::permutation: return "permutation";
    }
    return "?";
}

json params_json(const SystemParams& pr) {
    return {{"n0", pr.n0}, {"dv", pr.dv}, {"p", pr.p}, {"m", pr.m}, {"tprime", pr.t_prime}};
}

json wf_json(const WorkFactorReport& wf) {
    return {{"n_s", wf.n_s},         {"k_s", wf.k_s},
            {"w", wf.w},             {"a_w", wf.a_w},
            {"g_opt", wf.g_opt},     {"l_opt", wf.l_opt},
            {"log2_p", wf.log2_p},   {"log2_n", wf.log2_n},
            {"log2_c", wf.log2_c},   {"log2_wf", wf.log2_wf},
            {"p_exceeds_one", wf.p_exceeds_one},
            {"speedup12_applied", wf.speedup12_applied}};
}

void print_wf_table(const WorkFactorReport& wf) {
    std::printf("  code (n_S, k_S)     (%llu, %llu)\n",
                static_cast<unsigned long long>(wf.n_s),
                static_cast<unsigned long long>(wf.k_s));
    std::printf("  weight w / A_w      %u / %.0f\n", wf.w, wf.a_w);
    std::printf("  optimal (g, l)      (%u, %u)\n", wf.g_opt, wf.l_opt);
    std::printf("  log2 P              %.3f%s\n", wf.log2_p,
                wf.p_exceeds_one ? "  (P > 1: under one iteration expected)" : "");
    std::printf("  log2 N              %.3f\n", wf.log2_n);
    std::printf("  log2 c              %.3f\n", wf.log2_c);
    std::printf("  log2 WF             %.3f%s\n", wf.log2_wf,
                wf.speedup12_applied ? "  (with x12 speedup)" : "");
}

// ---------------------------------------------------------------- keygen

struct KeygenArgs {
    ParamArgs params;
    std::string variant = "hardened";
    std::string seed;
    std::string out_prefix;
};

int run_keygen(const KeygenArgs& a) {
    const SystemParams pr = a.params.resolve(false);
    Rng rng(parse_seed(a.seed));
    KeyPair kp = keygen(pr, parse_variant(a.variant), rng);

    const auto pub = serialize_public(kp.pub);
    const auto priv = serialize_private(kp.priv);
    write_file(a.out_prefix + ".pub", pub);
    write_file(a.out_prefix + ".priv", priv);
    std::printf("wrote %s.pub (%zu bytes, payload %zu) and %s.priv (%zu bytes)\n",
                a.out_prefix.c_str(), pub.size(), pub.size() - kKeyHeaderBytes,
                a.out_prefix.c_str(), priv.size());
    return kExitOk;
}

// ------------------------------------------------------- encrypt / decrypt

struct CryptArgs {
    std::string key, in, out, seed;
};

int run_encrypt(const CryptArgs& a) {
    PublicKey pk = parse_public(read_file(a.key));
    BitVec u = unpack_bits(read_file(a.in), pk.params.k());
    Rng rng(parse_seed(a.seed));
    write_file(a.out, pack_bits(encrypt(pk, u, rng)));
    return kExitOk;
}

int run_decrypt(const CryptArgs& a) {
    PrivateKey sk = parse_private(read_file(a.key));
    BitVec x = unpack_bits(read_file(a.in), sk.params.n());
    auto u = decrypt(sk, x);
    if (!u) {
        std::fprintf(stderr, "decoding failure: ciphertext outside correction radius\n");
        return kExitDecodeFailure;
    }
    write_file(a.out, pack_bits(*u));
    return kExitOk;
}

// ---------------------------------------------------------------- analyze

struct AnalyzeArgs {
    std::string target;
    int system = 0;
    std::uint32_t shifts = 0;
    bool scan_shifts = false;
    bool speedup12 = false;
    std::string format = "table";
};

SystemParams analyze_params(const AnalyzeArgs& a) {
    if (a.system < 1 || a.system > 3)
        throw std::invalid_argument("analyze needs --system 1|2|3");
    return SystemParams::preset(a.system);
}

int run_analyze(const AnalyzeArgs& a) {
    const bool as_json = a.format == "json";
    json j{{"analysis", a.target}};
    if (a.system) j["system"] = a.system;

    if (a.target == "dual") {
        const SystemParams pr = analyze_params(a);
        DualAttackReport rep = dual_attack_wf(pr);
        if (a.speedup12) rep.wf = apply_speedup12(rep.wf);
        if (as_json) {
            j.update(wf_json(rep.wf));
            j["params"] = params_json(pr);
            j["w_threshold_80"] = rep.w_threshold_80;
            std::cout << j.dump(2) << "\n";
        } else {
            std::printf("dual-code attack, system %d\n", a.system);
            print_wf_table(rep.wf);
            std::printf("  weight for WF>=2^80 %u\n", rep.w_threshold_80);
        }
        return kExitOk;
    }

    if (a.target == "decoding") {
        const SystemParams pr = analyze_params(a);
        if (a.scan_shifts && a.shifts)
            throw std::invalid_argument("--shifts and --scan-shifts are exclusive");
        if (a.shifts) {
            WorkFactorReport wf = decoding_attack_wf(pr, a.shifts);
            if (a.speedup12) wf = apply_speedup12(wf);
            if (as_json) {
                j.update(wf_json(wf));
                j["params"] = params_json(pr);
                j["r"] = a.shifts;
                std::cout << j.dump(2) << "\n";
            } else {
                std::printf("decoding attack, system %d, r=%u shifted rows\n", a.system,
                            a.shifts);
                print_wf_table(wf);
            }
            return kExitOk;
        }
        DecodingScan scan = decoding_attack_scan(pr, 0, a.scan_shifts);
        const double gain = a.speedup12 ? std::log2(12.0) : 0.0;
        if (a.speedup12) scan.best = apply_speedup12(scan.best);
        if (as_json) {
            j.update(wf_json(scan.best));
            j["params"] = params_json(pr);
            j["r_opt"] = scan.best_r;
            if (a.scan_shifts) {
                json curve = json::array();
                for (const auto& pt : scan.curve)
                    curve.push_back({{"r", pt.r}, {"log2_wf", pt.log2_wf - gain}});
                j["curve"] = curve;
            }
            std::cout << j.dump(2) << "\n";
        } else {
            std::printf("decoding attack, system %d, minimized over shifted rows\n",
                        a.system);
            std::printf("  best r              %u\n", scan.best_r);
            print_wf_table(scan.best);
            if (a.scan_shifts) {
                std::printf("  r-curve:\n");
                for (const auto& pt : scan.curve)
                    std::printf("    %6u  %10.3f\n", pt.r, pt.log2_wf - gain);
            }
        }
        return kExitOk;
    }

    if (a.target == "otd") {
        if (a.speedup12)
            throw std::invalid_argument("--speedup12 applies to Stern-based analyses only");
        const SystemParams pr = analyze_params(a);
        OtdEstimates est = otd_wf(pr);
        if (as_json) {
            j["params"] = params_json(pr);
            j["log2_s1"] = est.log2_s1;
            j["log2_s2"] = est.log2_s2;
            j["log2_s3"] = est.log2_s3;
            j["s3"] = wf_json(est.s3_wf);
            std::cout << j.dump(2) << "\n";
        } else {
            std::printf("OTD key-recovery strategies, system %d\n", a.system);
            std::printf("  strategy 1 (support tuples)  log2 WF %.3f\n", est.log2_s1);
            std::printf("  strategy 2 (shift overlap)   log2 WF %.3f\n", est.log2_s2);
            std::printf("  strategy 3 (Stern on row code)\n");
            print_wf_table(est.s3_wf);
        }
        return kExitOk;
    }

    if (a.target == "original-mceliece") {
        WorkFactorReport wf = original_mceliece_wf();
        if (a.speedup12) wf = apply_speedup12(wf);
        if (as_json) {
            j.update(wf_json(wf));
            std::cout << j.dump(2) << "\n";
        } else {
            std::printf("decoding attack on the original (1024,524) system, t=50\n");
            print_wf_table(wf);
        }
        return kExitOk;
    }

    throw std::invalid_argument("unknown analysis " + a.target);
}

// ----------------------------------------------------------------- attack

struct AttackArgs {
    std::string target;
    ParamArgs params;
    std::string variant;  // empty: per-attack default
    std::string seed = "1";
    std::uint64_t iterations = 2000;
    std::uint32_t g = 0, l = 0;  // 0: per-attack default
    std::uint32_t shifts = 8;
};

KeyPair attack_keypair(const AttackArgs& a, const char* default_variant) {
    const SystemParams pr = a.params.resolve(true);
    Rng rng(parse_seed(a.seed));
    const std::string v = a.variant.empty() ? default_variant : a.variant;
    KeyPair kp = keygen(pr, parse_variant(v), rng);
    std::printf("toy key: n0=%u dv=%u p=%u m=%u t'=%u variant=%s\n", kp.pub.params.n0,
                kp.pub.params.dv, kp.pub.params.p, kp.pub.params.m, kp.pub.params.t_prime,
                variant_name(kp.pub.variant));
    return kp;
}

SternConfig attack_cfg(const AttackArgs& a, std::uint32_t def_g, std::uint32_t def_l) {
    SternConfig cfg;
    cfg.g = a.g ? a.g : def_g;
    cfg.l = a.l ? a.l : def_l;
    cfg.max_iterations = a.iterations;
    cfg.seed = parse_seed(a.seed) ^ 0x5bf03635ULL;
    return cfg;
}

bool is_shift_of(const RingPoly& cand, const RingPoly& truth) {
    for (std::uint32_t s = 0; s < truth.modulus(); ++s)
        if (cand == truth.rotated(s)) return true;
    return false;
}

int run_attack_stern(const AttackArgs& a) {
    // classic (7,4) Hamming demo target
    DenseMatrix gen(4, 7);
    const int parity[4][3] = {{1, 1, 0}, {1, 0, 1}, {0, 1, 1}, {1, 1, 1}};
    for (std::size_t i = 0; i < 4; ++i) {
        gen.set(i, i, true);
        for (std::size_t j = 0; j < 3; ++j)
            if (parity[i][j]) gen.set(i, 4 + j, true);
    }
    SternResult res = stern_search(gen, 3, attack_cfg(a, 1, 2));
    if (res.codewords.empty()) {
        std::printf("no weight-3 codeword found in %llu iterations\n",
                    static_cast<unsigned long long>(res.iterations_run));
        return kExitNotFound;
    }
    std::printf("(7,4) Hamming code, weight-3 codeword:");
    for (auto pos : res.codewords.front().support()) std::printf(" %u", pos);
    std::printf("\nfound after %llu iterations\n",
                static_cast<unsigned long long>(res.iterations_run));
    return kExitOk;
}

int run_attack_dual(const AttackArgs& a) {
    KeyPair kp = attack_keypair(a, "permutation");
    DualAttackResult res = dual_code_attack(kp.pub, attack_cfg(a, 2, 16));
    if (res.rows.empty()) {
        std::printf("no dual codeword of weight <= %u found in %llu iterations\n",
                    kp.pub.params.dc() * kp.pub.params.m,
                    static_cast<unsigned long long>(res.iterations_run));
        return kExitNotFound;
    }
    std::printf("recovered %zu sparse dual row(s); first has weight %zu\n",
                res.rows.size(), res.rows.front().weight());

    // end-to-end: decode a fresh ciphertext with the recovered parity check
    Rng rng(parse_seed(a.seed) ^ 0xc0ffee);
    BitVec u = BitVec::random(kp.pub.params.k(), rng);
    BitVec x = encrypt(kp.pub, u, rng);
    auto rec = decode_with_dual_row(kp.pub, res.rows.front(), x);
    const bool ok = rec && *rec == u;
    std::printf("ciphertext decode with recovered parity: %s\n",
                ok ? "plaintext recovered" : "failed");
    return ok ? kExitOk : kExitNotFound;
}

int run_attack_decoding(const AttackArgs& a) {
    KeyPair kp = attack_keypair(a, "hardened");
    Rng rng(parse_seed(a.seed) ^ 0xc0ffee);
    BitVec u = BitVec::random(kp.pub.params.k(), rng);
    BitVec x = encrypt(kp.pub, u, rng);

    auto res = decoding_attack(kp.pub, x, a.shifts, attack_cfg(a, 2, 16));
    if (!res) {
        std::printf("no weight-%u codeword surfaced within the budget\n",
                    kp.pub.params.t_prime);
        return kExitNotFound;
    }
    BitVec check = kp.pub.g_pub.left_mul(res->u);
    check ^= res->e;
    const bool ok = check == x && res->u == u;
    std::printf("recovered error of weight %zu via shift %u; re-encoding %s\n",
                res->e.weight(), res->shift, ok ? "matches the ciphertext" : "FAILED");
    return ok ? kExitOk : kExitNotFound;
}

int run_attack_otd12(const AttackArgs& a, bool strategy2) {
    KeyPair kp = attack_keypair(a, "weak-otd");
    const auto cands =
        strategy2 ? otd_strategy2(kp.pub) : otd_strategy1(kp.pub, 1000000);
    if (cands.empty()) {
        std::printf("no candidate error-spreader block survived validation\n");
        return kExitNotFound;
    }
    bool any_verified = false;
    for (const auto& c : cands) {
        const bool hit = is_shift_of(c.q, kp.priv.q.at(c.block_row, c.block_row));
        any_verified = any_verified || hit;
        std::printf("block row %u: candidate q support =", c.block_row);
        for (auto e : c.q.support()) std::printf(" %u", e);
        std::printf("  [%s]\n", hit ? "shift of the true q" : "spurious");
    }
    return any_verified ? kExitOk : kExitNotFound;
}

int run_attack_otd3(const AttackArgs& a) {
    KeyPair kp = attack_keypair(a, "weak-otd");
    const auto cands = otd_strategy3(kp.pub, attack_cfg(a, 2, 16));
    if (cands.empty()) {
        std::printf("no low-weight row surfaced in the inverse-row code\n");
        return kExitNotFound;
    }
    const std::uint32_t p = kp.pub.params.p;
    bool any_verified = false;
    for (const auto& c : cands) {
        bool hit = false;
        for (std::uint32_t s = 0; s < p && !hit; ++s) {
            bool all = true;
            for (std::size_t j = 0; j < c.s_row.size(); ++j)
                all = all && c.s_row[j] == kp.priv.s.at(c.block_row, j).rotated(s);
            hit = all;
        }
        any_verified = any_verified || hit;
        std::printf("block row %u: scrambler row candidate, block weights", c.block_row);
        for (const auto& blk : c.s_row) std::printf(" %zu", blk.weight());
        std::printf("  [%s]\n", hit ? "shift of the true S row" : "spurious");
    }
    return any_verified ? kExitOk : kExitNotFound;
}

int run_attack(const AttackArgs& a) {
    if (a.target == "stern") return run_attack_stern(a);
    if (a.target == "dual") return run_attack_dual(a);
    if (a.target == "decoding") return run_attack_decoding(a);
    if (a.target == "otd1") return run_attack_otd12(a, false);
    if (a.target == "otd2") return run_attack_otd12(a, true);
    if (a.target == "otd3") return run_attack_otd3(a);
    throw std::invalid_argument("unknown attack " + a.target);
}

// --------------------------------------------------------------- simulate

struct SimulateArgs {
    ParamArgs params;
    std::uint32_t t = 0;
    std::uint64_t frames = 0;
    std::string seed = "1";
    int max_iterations = 100;
    int qbits = 0, qfrac = 1;
    unsigned threads = 0;
    std::string format = "table";
};

int run_simulate(const SimulateArgs& a) {
    const SystemParams pr = a.params.resolve(false);
    if (a.frames < 1) throw std::invalid_argument("--frames must be >= 1");
    if (a.t > pr.n()) throw std::invalid_argument("--t above code length");

    const std::uint64_t seed = parse_seed(a.seed);
    Rng rng(seed);
    QcLdpcCode code = make_code(pr, rng);

    DecoderConfig cfg;
    cfg.max_iterations = a.max_iterations;
    if (a.qbits) {
        cfg.quant_bits = a.qbits;
        cfg.quant_frac = a.qfrac;
    }
    SimReport rep = run_fer(code, a.t, a.frames, cfg, seed, a.threads);

    if (a.format == "json") {
        json j{{"params", params_json(pr)},
               {"seed", a.seed},
               {"t", a.t},
               {"frames", rep.frames_run},
               {"frame_errors", rep.frame_errors},
               {"bit_errors", rep.bit_errors},
               {"fer", rep.fer},
               {"ber", rep.ber},
               {"i_ave", rep.i_ave},
               {"wall_time_s", rep.wall_time_s}};
        std::cout << j.dump(2) << "\n";
    } else {
        std::printf("frames %llu  t %u\n", static_cast<unsigned long long>(rep.frames_run),
                    a.t);
        std::printf("frame errors %llu  (FER %.3g)\n",
                    static_cast<unsigned long long>(rep.frame_errors), rep.fer);
        std::printf("bit errors   %llu  (BER %.3g)\n",
                    static_cast<unsigned long long>(rep.bit_errors), rep.ber);
        std::printf("I_ave %.3f  wall %.2fs\n", rep.i_ave, rep.wall_time_s);
    }
    return kExitOk;
}

// ------------------------------------------------------------- complexity

struct ComplexityArgs {
    int system = 0;
    double iave = 0.0;
    std::uint32_t qbits = 6;
    std::string format = "table";
};

int run_complexity(const ComplexityArgs& a) {
    if (a.system < 1 || a.system > 3)
        throw std::invalid_argument("complexity needs --system 1|2|3");
    const SystemParams pr = SystemParams::preset(a.system);
    ComplexityReport rep = complexity_estimate(pr, a.iave, a.qbits);
    const std::uint64_t keylen = keysize_bytes(pr);

    if (a.format == "json") {
        json j{{"system", a.system},
               {"params", params_json(pr)},
               {"i_ave", rep.i_ave},
               {"qbits", rep.q},
               {"m_p", rep.m_p},
               {"c_enc", rep.c_enc},
               {"c_dec", rep.c_dec},
               {"c_spa", rep.c_spa},
               {"c_mul_enc", rep.c_mul_enc},
               {"c_mul_xq", rep.c_mul_xq},
               {"c_mul_us", rep.c_mul_us},
               {"c_enc_per_bit", rep.c_enc_per_bit},
               {"c_dec_per_bit", rep.c_dec_per_bit},
               {"key_bytes", keylen}};
        std::cout << j.dump(2) << "\n";
    } else {
        std::printf("complexity model, system %d (I_ave %.3f, q %u)\n", a.system, rep.i_ave,
                    rep.q);
        std::printf("  circulant product M(p)   %.4g\n", rep.m_p);
        std::printf("  C_enc                    %.4g   (%.1f /bit)\n", rep.c_enc,
                    rep.c_enc_per_bit);
        std::printf("  C_dec                    %.4g   (%.1f /bit)\n", rep.c_dec,
                    rep.c_dec_per_bit);
        std::printf("    decoder part           %.4g\n", rep.c_spa);
        std::printf("    product parts          %.4g + %.4g\n", rep.c_mul_xq, rep.c_mul_us);
        std::printf("  public key               %llu bytes\n",
                    static_cast<unsigned long long>(keylen));
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"QC-LDPC McEliece toolkit: keys, attacks, analyzers, simulation"};
    app.require_subcommand(1);

    KeygenArgs kg;
    auto* keygen_cmd = app.add_subcommand("keygen", "generate a key pair");
    add_param_flags(keygen_cmd, kg.params, false);
    keygen_cmd->add_option("--variant", kg.variant, "hardened|weak-otd|permutation");
    keygen_cmd->add_option("--seed", kg.seed, "hex seed")->required();
    keygen_cmd->add_option("--out-prefix", kg.out_prefix, "output path prefix")->required();

    CryptArgs enc;
    auto* encrypt_cmd = app.add_subcommand("encrypt", "cleartext file -> ciphertext file");
    encrypt_cmd->add_option("--pub", enc.key, "public key file")->required();
    encrypt_cmd->add_option("--in", enc.in, "cleartext input")->required();
    encrypt_cmd->add_option("--out", enc.out, "ciphertext output")->required();
    encrypt_cmd->add_option("--seed", enc.seed, "hex seed for the error pattern")->required();

    CryptArgs dec;
    auto* decrypt_cmd = app.add_subcommand("decrypt", "ciphertext file -> cleartext file");
    decrypt_cmd->add_option("--priv", dec.key, "private key file")->required();
    decrypt_cmd->add_option("--in", dec.in, "ciphertext input")->required();
    decrypt_cmd->add_option("--out", dec.out, "cleartext output")->required();

    AnalyzeArgs an;
    auto* analyze_cmd = app.add_subcommand("analyze", "closed-form work factors");
    analyze_cmd->add_option("target", an.target, "dual|decoding|otd|original-mceliece")
        ->required();
    analyze_cmd->add_option("--system", an.system, "parameter set 1|2|3");
    analyze_cmd->add_option("--shifts", an.shifts, "fixed shifted-row count r");
    analyze_cmd->add_flag("--scan-shifts", an.scan_shifts, "emit the whole r-curve");
    analyze_cmd->add_flag("--speedup12", an.speedup12, "apply the x12 iteration speedup");
    analyze_cmd->add_option("--format", an.format, "table|json");

    AttackArgs at;
    auto* attack_cmd = app.add_subcommand("attack", "executable toy-scale attacks");
    attack_cmd->add_option("target", at.target, "stern|dual|decoding|otd1|otd2|otd3")
        ->required();
    add_param_flags(attack_cmd, at.params, true);
    attack_cmd->add_option("--variant", at.variant,
                           "key variant (defaults fit the chosen attack)");
    attack_cmd->add_option("--seed", at.seed, "hex seed");
    attack_cmd->add_option("--iterations", at.iterations, "search budget");
    attack_cmd->add_option("--g", at.g, "rows per half in the collision search");
    attack_cmd->add_option("--l", at.l, "window bits");
    attack_cmd->add_option("--shifts", at.shifts, "extended-code rows (decoding attack)");

    SimulateArgs si;
    auto* simulate_cmd = app.add_subcommand("simulate", "Monte Carlo FER/BER");
    add_param_flags(simulate_cmd, si.params, true);
    simulate_cmd->add_option("--t", si.t, "channel error weight")->required();
    simulate_cmd->add_option("--frames", si.frames, "frame count")->required();
    simulate_cmd->add_option("--seed", si.seed, "hex seed");
    simulate_cmd->add_option("--max-iterations", si.max_iterations, "decoder cap");
    simulate_cmd->add_option("--qbits", si.qbits, "message quantizer total bits");
    simulate_cmd->add_option("--qfrac", si.qfrac, "quantizer fractional bits");
    simulate_cmd->add_option("--threads", si.threads, "worker threads (0 = auto)");
    simulate_cmd->add_option("--format", si.format, "table|json");

    ComplexityArgs cx;
    auto* complexity_cmd = app.add_subcommand("complexity", "encode/decode cost model");
    complexity_cmd->add_option("--system", cx.system, "parameter set 1|2|3")->required();
    complexity_cmd->add_option("--iave", cx.iave, "average decoder iterations")->required();
    complexity_cmd->add_option("--qbits", cx.qbits, "decoder quantization bits");
    complexity_cmd->add_option("--format", cx.format, "table|json");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitBadParams;
    }

    try {
        if (*keygen_cmd) return run_keygen(kg);
        if (*encrypt_cmd) return run_encrypt(enc);
        if (*decrypt_cmd) return run_decrypt(dec);
        if (*analyze_cmd) return run_analyze(an);
        if (*attack_cmd) return run_attack(at);
        if (*simulate_cmd) return run_simulate(si);
        if (*complexity_cmd) return run_complexity(cx);
    } catch (const SamplingExhausted& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitSamplingExhausted;
    } catch (const KeyFileError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitBadParams;
    } catch (const InfeasibleWeight& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitBadParams;
    } catch (const std::invalid_argument& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitBadParams;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
    return kExitOk;
}
