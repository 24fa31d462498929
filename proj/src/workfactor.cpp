#include "qclm/workfactor.hpp"

#include <cmath>
#include <limits>

namespace qclm {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
const double kLn2 = std::log(2.0);

// log2 C(x, y) for real x, y; -inf when the pair is out of domain
double lb2(double x, double y) {
    if (y < 0.0 || x < y) return -kInf;
    return (std::lgamma(x + 1.0) - std::lgamma(y + 1.0) - std::lgamma(x - y + 1.0)) / kLn2;
}

}  // namespace

double stern_iteration_log2p(std::uint64_t n_s, std::uint64_t k_s, std::uint32_t w,
                             double a_w, std::uint32_t g, std::uint32_t l) {
    const double n = static_cast<double>(n_s);
    const double k = static_cast<double>(k_s);
    const double r = n - k;
    const double half_k = k / 2.0;
    const double dw = static_cast<double>(w);
    const double dg = static_cast<double>(g);
    const double dl = static_cast<double>(l);
    return lb2(dw, dg) + lb2(n - dw, half_k - dg) - lb2(n, half_k) + lb2(dw - dg, dg) +
           lb2(n - half_k - dw + dg, half_k - dg) - lb2(n - half_k, half_k) +
           lb2(r - dw + 2.0 * dg, dl) - lb2(r, dl) + std::log2(a_w);
}

WorkFactorReport stern_wf(std::uint64_t n_s, std::uint64_t k_s, std::uint32_t w,
                          double a_w, std::uint32_t g_max, std::uint32_t l_max) {
    if (n_s < 3 || k_s == 0 || k_s >= n_s)
        throw std::invalid_argument("stern_wf: need 0 < k_s < n_s");
    if (w == 0 || w > n_s) throw std::invalid_argument("stern_wf: need 0 < w <= n_s");
    if (a_w < 1.0) throw std::invalid_argument("stern_wf: need a_w >= 1");

    const double n = static_cast<double>(n_s);
    const double k = static_cast<double>(k_s);
    const double r = n - k;
    const double half_k = k / 2.0;
    const double dw = static_cast<double>(w);
    const double log2_aw = std::log2(a_w);

    const std::uint32_t g_hi = static_cast<std::uint32_t>(
        std::min<double>(g_max, std::floor(half_k)));
    const std::uint32_t l_hi = static_cast<std::uint32_t>(
        std::min<double>(l_max, r));

    WorkFactorReport best;
    best.n_s = n_s;
    best.k_s = k_s;
    best.w = w;
    best.a_w = a_w;
    best.log2_wf = kInf;

    for (std::uint32_t g = 1; g <= g_hi; ++g) {
        const double dg = static_cast<double>(g);
        // split-weight probability pieces that do not involve l
        const double lp_base = lb2(dw, dg) + lb2(n - dw, half_k - dg) - lb2(n, half_k) +
                               lb2(dw - dg, dg) + lb2(n - half_k - dw + dg, half_k - dg) -
                               lb2(n - half_k, half_k);
        if (!std::isfinite(lp_base)) continue;
        const double lsize = lb2(half_k, dg);  // log2 of per-half subset count

        for (std::uint32_t l = 1; l <= l_hi; ++l) {
            const double dl = static_cast<double>(l);
            const double lp_win = lb2(r - dw + 2.0 * dg, dl) - lb2(r, dl);
            if (!std::isfinite(lp_win)) continue;
            const double log2_p = lp_base + lp_win + log2_aw;

            const double subsets = std::exp2(lsize);
            const double cost = r * r * r / 2.0 + k * r * r +
                                2.0 * dg * dl * subsets +
                                2.0 * dg * r * subsets * subsets / std::exp2(dl);
            const double log2_n_iter = std::log2(cost);
            const double log2_wf = log2_n_iter - log2_p;
            if (log2_wf < best.log2_wf) {
                best.g_opt = g;
                best.l_opt = l;
                best.log2_p = log2_p;
                best.log2_n = log2_n_iter;
                best.log2_c = -log2_p;
                best.log2_wf = log2_wf;
                best.p_exceeds_one = log2_p > 0.0;
            }
        }
    }
    if (!std::isfinite(best.log2_wf))
        throw InfeasibleWeight("stern_wf: no admissible (g,l) split for this weight");
    return best;
}

DualAttackReport dual_attack_wf(const SystemParams& params) {
    params.validate();
    const std::uint64_t n = params.n();
    const std::uint64_t red = params.p;  // n - k
    DualAttackReport out{stern_wf(n, red, params.dc() * params.m,
                                  static_cast<double>(red)),
                         0};
    for (std::uint32_t w = 1; w <= n; ++w) {
        try {
            if (stern_wf(n, red, w, static_cast<double>(red)).log2_wf >= 80.0) {
                out.w_threshold_80 = w;
                break;
            }
        } catch (const InfeasibleWeight&) {
        }
    }
    return out;
}

WorkFactorReport decoding_attack_wf(const SystemParams& params, std::uint32_t r) {
    params.validate();
    const std::uint32_t eff_r = r == 0 ? 1 : r;
    const double a_w = r == 0 ? 1.0 : static_cast<double>(r);
    return stern_wf(params.n(), params.k() + eff_r, params.t_prime, a_w);
}

DecodingScan decoding_attack_scan(const SystemParams& params, std::uint32_t r_max,
                                  bool full_curve) {
    params.validate();
    if (r_max == 0) r_max = params.p;
    DecodingScan scan;
    scan.best.log2_wf = kInf;
    std::uint32_t since_improvement = 0;
    for (std::uint32_t r = 1; r <= r_max; ++r) {
        WorkFactorReport wf;
        try {
            wf = decoding_attack_wf(params, r);
        } catch (const InfeasibleWeight&) {
            continue;
        }
        scan.curve.push_back({r, wf.log2_wf});
        if (wf.log2_wf < scan.best.log2_wf) {
            scan.best = wf;
            scan.best_r = r;
            since_improvement = 0;
        } else if (!full_curve && ++since_improvement >= 300) {
            break;
        }
    }
    if (!std::isfinite(scan.best.log2_wf))
        throw InfeasibleWeight("decoding_attack_scan: no admissible shift count");
    return scan;
}

OtdEstimates otd_wf(const SystemParams& params) {
    params.validate();
    const double p = static_cast<double>(params.p);
    const double m = static_cast<double>(params.m);
    OtdEstimates est;
    est.log2_s1 = lb2(m * m, m) + 2.0 * std::log2(p);
    est.log2_s2 = std::log2(p) + std::log2(p + p * p);
    est.s3_wf = stern_wf(static_cast<std::uint64_t>(params.n0 - 1) * params.p, params.p,
                         params.m * (params.n0 - 1), p);
    est.log2_s3 = est.s3_wf.log2_wf;
    return est;
}

WorkFactorReport original_mceliece_wf() { return stern_wf(1024, 525, 50, 1.0); }

WorkFactorReport apply_speedup12(WorkFactorReport report) {
    if (report.speedup12_applied)
        throw std::logic_error("apply_speedup12: already applied");
    const double gain = std::log2(12.0);
    report.log2_n -= gain;
    report.log2_wf -= gain;
    report.speedup12_applied = true;
    return report;
}

ComplexityReport complexity_estimate(const SystemParams& params, double i_ave,
                                     std::uint32_t q) {
    params.validate();
    if (!(i_ave > 0.0)) throw std::invalid_argument("complexity_estimate: i_ave must be > 0");
    if (q == 0) throw std::invalid_argument("complexity_estimate: q must be >= 1");

    ComplexityReport rep;
    rep.i_ave = i_ave;
    rep.q = q;
    const double p = static_cast<double>(params.p);
    rep.m_p = 3.91 * std::pow(p, std::log(5.0) / std::log(3.0));

    const double n = static_cast<double>(params.n());
    const double k = static_cast<double>(params.k());
    const double k0 = static_cast<double>(params.k0());
    const double n0 = static_cast<double>(params.n0);
    const double dv = static_cast<double>(params.dv);
    const double rate = params.rate();

    rep.c_mul_enc = k0 * n0 * rep.m_p;
    rep.c_enc = rep.c_mul_enc + n;

    rep.c_mul_xq = n0 * n0 * rep.m_p;
    rep.c_mul_us = k0 * k0 * rep.m_p;
    rep.c_spa = i_ave * n * (static_cast<double>(q) * (8.0 * dv + 12.0 * rate - 11.0) + dv);
    rep.c_dec = rep.c_mul_xq + rep.c_spa + rep.c_mul_us;

    rep.c_enc_per_bit = rep.c_enc / k;
    rep.c_dec_per_bit = rep.c_dec / k;
    return rep;
}

std::uint64_t keysize_bytes(const SystemParams& params) {
    const std::uint64_t bits =
        static_cast<std::uint64_t>(params.k0()) * params.n0 * params.p;
    return (bits + 7) / 8;
}

}  // namespace qclm
