#include <cmath>

#include "doctest.h"
#include "qclm/workfactor.hpp"

using namespace qclm;

TEST_CASE("dual-code work factors for the three presets") {
    const DualAttackReport r1 = dual_attack_wf(SystemParams::preset(1));
    CHECK(r1.wf.w == 364);
    CHECK(r1.wf.a_w == doctest::Approx(4096));
    CHECK(r1.wf.log2_wf == doctest::Approx(152.978).epsilon(0.001));
    CHECK(r1.w_threshold_80 == 179);

    const DualAttackReport r2 = dual_attack_wf(SystemParams::preset(2));
    CHECK(r2.wf.log2_wf == doctest::Approx(249.746).epsilon(0.001));
    CHECK(r2.w_threshold_80 == 127);

    const DualAttackReport r3 = dual_attack_wf(SystemParams::preset(3));
    CHECK(r3.wf.log2_wf == doctest::Approx(339.782).epsilon(0.001));
    CHECK(r3.w_threshold_80 == 124);
}

TEST_CASE("decoding-attack minima over shifted rows") {
    const DecodingScan s1 = decoding_attack_scan(SystemParams::preset(1));
    CHECK(s1.best_r == 192);
    CHECK(s1.best.log2_wf == doctest::Approx(65.577).epsilon(0.001));

    const DecodingScan s2 = decoding_attack_scan(SystemParams::preset(2));
    CHECK(s2.best_r == 243);
    CHECK(s2.best.log2_wf == doctest::Approx(75.771).epsilon(0.001));

    const DecodingScan s3 = decoding_attack_scan(SystemParams::preset(3));
    CHECK(s3.best_r == 305);
    CHECK(s3.best.log2_wf == doctest::Approx(106.529).epsilon(0.001));
}

TEST_CASE("early-stop scan agrees with an exhaustive window") {
    const DecodingScan fast = decoding_attack_scan(SystemParams::preset(1));
    const DecodingScan full = decoding_attack_scan(SystemParams::preset(1), 400, true);
    CHECK(full.curve.size() == 400);
    CHECK(fast.best_r == full.best_r);
    CHECK(fast.best.log2_wf == doctest::Approx(full.best.log2_wf));
}

TEST_CASE("single-r evaluation and the r=0 convention") {
    const SystemParams pr = SystemParams::preset(1);
    const WorkFactorReport at_min = decoding_attack_wf(pr, 192);
    CHECK(at_min.k_s == pr.k() + 192);
    CHECK(at_min.a_w == doctest::Approx(192));
    const WorkFactorReport r0 = decoding_attack_wf(pr, 0);
    const WorkFactorReport direct = stern_wf(pr.n(), pr.k() + 1, pr.t_prime, 1.0);
    CHECK(r0.log2_wf == doctest::Approx(direct.log2_wf));
}

TEST_CASE("original McEliece reference point") {
    const WorkFactorReport wf = original_mceliece_wf();
    CHECK(wf.n_s == 1024);
    CHECK(wf.k_s == 525);
    CHECK(wf.w == 50);
    CHECK(wf.log2_wf == doctest::Approx(63.669).epsilon(0.001));
}

TEST_CASE("OTD strategy estimates") {
    const OtdEstimates est = otd_wf(SystemParams::preset(1));
    CHECK(est.log2_s1 == doctest::Approx(50.356).epsilon(0.001));
    CHECK(est.log2_s2 == doctest::Approx(36.0004).epsilon(0.001));
    CHECK(est.log2_s3 == doctest::Approx(32.3).epsilon(0.02));
    // the s3 point sits in the P > 1 regime: under one expected iteration
    CHECK(est.s3_wf.p_exceeds_one);
    CHECK(est.s3_wf.log2_c < 0.0);
}

TEST_CASE("speedup folds once and only once") {
    WorkFactorReport wf = original_mceliece_wf();
    const double before = wf.log2_wf;
    wf = apply_speedup12(wf);
    CHECK(wf.log2_wf == doctest::Approx(before - std::log2(12.0)));
    CHECK(wf.speedup12_applied);
    CHECK(wf.log2_wf == doctest::Approx(60.084).epsilon(0.001));
    CHECK_THROWS_AS(apply_speedup12(wf), std::logic_error);
}

TEST_CASE("work factor consistency: WF = N + c in log2") {
    const WorkFactorReport wf = dual_attack_wf(SystemParams::preset(1)).wf;
    CHECK(wf.log2_wf == doctest::Approx(wf.log2_n + wf.log2_c));
    CHECK(wf.log2_c == doctest::Approx(-wf.log2_p));
}

TEST_CASE("degenerate weights are infeasible") {
    CHECK_THROWS_AS(stern_wf(100, 50, 1, 1.0), InfeasibleWeight);
    CHECK_THROWS_AS(stern_wf(100, 0, 10, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(stern_wf(100, 100, 10, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(stern_wf(100, 50, 0, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(stern_wf(100, 50, 10, 0.5), std::invalid_argument);
}

TEST_CASE("fixed-split probability is coherent with the optimizer") {
    const WorkFactorReport wf = original_mceliece_wf();
    const double lp = stern_iteration_log2p(wf.n_s, wf.k_s, wf.w, wf.a_w, wf.g_opt, wf.l_opt);
    CHECK(lp == doctest::Approx(wf.log2_p));
    // out-of-domain split
    CHECK(std::isinf(stern_iteration_log2p(20, 10, 3, 1.0, 2, 2)));
}

TEST_CASE("complexity model shape") {
    const SystemParams pr = SystemParams::preset(2);
    const ComplexityReport low = complexity_estimate(pr, 4.0, 6);
    const ComplexityReport high = complexity_estimate(pr, 8.0, 6);
    CHECK(low.c_enc == doctest::Approx(high.c_enc));  // encoding ignores I_ave
    CHECK(high.c_dec > low.c_dec);
    CHECK(high.c_spa == doctest::Approx(2.0 * low.c_spa));
    CHECK(low.c_dec == doctest::Approx(low.c_spa + low.c_mul_xq + low.c_mul_us));
    CHECK(low.c_enc_per_bit == doctest::Approx(low.c_enc / double(pr.k())));
    CHECK_THROWS_AS(complexity_estimate(pr, 0.0, 6), std::invalid_argument);
    CHECK_THROWS_AS(complexity_estimate(pr, 4.0, 0), std::invalid_argument);
}

TEST_CASE("key sizes match the published table") {
    CHECK(keysize_bytes(SystemParams::preset(1)) == 6144);
    CHECK(keysize_bytes(SystemParams::preset(2)) == 6144);
    CHECK(keysize_bytes(SystemParams::preset(3)) == 12288);
}
