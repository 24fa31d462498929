#include "qclm/code.hpp"

#include <set>
#include <stdexcept>

namespace qclm {

DifferenceFamily sample_difference_family(std::uint32_t n0, std::uint32_t dv,
                                          std::uint32_t p, Rng& rng) {
    if (std::uint64_t(n0) * dv * (dv - 1) >= p)
        throw std::invalid_argument("difference-family preconditions need n0*dv*(dv-1) < p");
    DifferenceFamily df;
    df.p = p;
    std::vector<bool> used(p, false);  // committed differences from finished sets
    const std::uint32_t element_budget = 64 * dv;
    const std::uint32_t restart_budget = 256;
    for (std::uint32_t s = 0; s < n0; ++s) {
        std::uint32_t restarts = 0;
        while (true) {
            std::vector<std::uint32_t> h;
            std::vector<std::uint32_t> local;  // differences this set added
            std::uint32_t rejections = 0;
            auto in_local = [&](std::uint32_t d) {
                for (auto x : local)
                    if (x == d) return true;
                return false;
            };
            while (h.size() < dv && rejections < element_budget) {
                const auto e = std::uint32_t(rng.below(p));
                std::vector<std::uint32_t> fresh;
                bool ok = true;
                for (auto a : h) {
                    const std::uint32_t d1 = (e + p - a) % p;
                    const std::uint32_t d2 = (a + p - e) % p;
                    // d1 == d2 means a difference of p/2: rows r and r+p/2 of the
                    // circulant would then share two columns, closing a 4-cycle
                    if (d1 == 0 || d1 == d2 || used[d1] || used[d2] || in_local(d1) ||
                        in_local(d2)) {
                        ok = false;
                        break;
                    }
                    fresh.push_back(d1);
                    fresh.push_back(d2);
                }
                // the candidate's own differences may also collide with each other
                // (2e = a1 + a2 folds two of them onto the same residue)
                for (std::size_t i = 0; ok && i < fresh.size(); ++i)
                    for (std::size_t j = i + 1; ok && j < fresh.size(); ++j)
                        if (fresh[i] == fresh[j]) ok = false;
                if (!ok) {
                    ++rejections;
                    continue;
                }
                h.push_back(e);
                for (auto d : fresh) local.push_back(d);
            }
            if (h.size() == dv) {
                for (auto d : local) used[d] = true;
                df.sets.push_back(std::move(h));
                break;
            }
            if (++restarts >= restart_budget)
                throw SamplingExhausted("difference family sampling exhausted retries");
        }
    }
    return df;
}

bool check_disjoint_differences(const DifferenceFamily& df) {
    std::set<std::uint32_t> seen;
    for (const auto& h : df.sets) {
        std::set<std::uint32_t> elems(h.begin(), h.end());
        if (elems.size() != h.size()) return false;
        for (auto a : h)
            for (auto b : h) {
                if (a == b) continue;
                const std::uint32_t d = (a + df.p - b) % df.p;
                if (!seen.insert(d).second) return false;
            }
    }
    return true;
}

QcBlockMatrix build_parity_check(const DifferenceFamily& df) {
    QcBlockMatrix h(df.p, 1, df.sets.size());
    for (std::size_t j = 0; j < df.sets.size(); ++j)
        h.at(0, j) = RingPoly::from_support(df.p, df.sets[j]);
    return h;
}

std::optional<QcBlockMatrix> derive_generator(const QcBlockMatrix& h) {
    const std::size_t n0 = h.block_cols();
    const std::uint32_t p = h.modulus();
    auto last_inv = h.at(0, n0 - 1).inverse();
    if (!last_inv) return std::nullopt;
    QcBlockMatrix g(p, n0 - 1, n0);
    for (std::size_t i = 0; i + 1 < n0; ++i) {
        g.at(i, i) = RingPoly::one(p);
        g.at(i, n0 - 1) = (*last_inv * h.at(0, i)).transposed();
    }
    return g;
}

bool has_no_length4_cycles(const QcBlockMatrix& h) {
    const DenseMatrix d = h.to_dense();
    // any pair of rows sharing two columns closes a 4-cycle
    for (std::size_t a = 0; a < d.rows(); ++a) {
        BitVec ra = d.row(a);
        for (std::size_t b = a + 1; b < d.rows(); ++b) {
            BitVec overlap = ra & d.row(b);
            if (overlap.weight() >= 2) return false;
        }
    }
    return true;
}

QcLdpcCode make_code(const SystemParams& params, Rng& rng) {
    params.validate();
    for (int attempt = 0; attempt < 64; ++attempt) {
        auto df = sample_difference_family(params.n0, params.dv, params.p, rng);
        auto h = build_parity_check(df);
        if (auto g = derive_generator(h))
            return {params, std::move(h), std::move(*g)};
    }
    throw SamplingExhausted("code construction kept hitting singular last blocks");
}

BitVec syndrome(const QcBlockMatrix& h, const BitVec& v) {
    if (v.size() != h.cols()) throw std::invalid_argument("syndrome length mismatch");
    const std::uint32_t p = h.modulus();
    BitVec out(h.rows());
    for (std::size_t bi = 0; bi < h.block_rows(); ++bi) {
        RingPoly acc(p);
        for (std::size_t bj = 0; bj < h.block_cols(); ++bj) {
            RingPoly vj(p);
            vj.coeffs() = v.slice(bj * p, p);
            acc += h.at(bi, bj).transposed() * vj;
        }
        out.paste(bi * p, acc.coeffs());
    }
    return out;
}

}  // namespace qclm
