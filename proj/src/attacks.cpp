#include "qclm/attacks.hpp"

#include <algorithm>
#include <stdexcept>

namespace qclm {
namespace {

// m-subset enumerator over an index set of size n
struct Subsets {
    std::uint32_t n, m;
    std::vector<std::uint32_t> idx;
    bool done;

    Subsets(std::uint32_t n_, std::uint32_t m_) : n(n_), m(m_), done(m_ > n_) {
        idx.resize(m);
        for (std::uint32_t i = 0; i < m; ++i) idx[i] = i;
    }

    void next() {
        for (std::uint32_t i = m; i-- > 0;) {
            if (idx[i] < n - m + i) {
                ++idx[i];
                for (std::uint32_t j = i + 1; j < m; ++j) idx[j] = idx[j - 1] + 1;
                return;
            }
        }
        done = true;
    }
};

// accepted when d^-1 g_ij has weight m across the block row (null blocks of a
// sparse scrambler stay null and carry no evidence either way)
bool validate_q_candidate(const RingPoly& cand, const QcBlockMatrix& inv, std::size_t i,
                          std::uint32_t m) {
    auto cand_inv = cand.inverse();
    if (!cand_inv) return false;
    for (std::size_t j = 0; j < inv.block_cols(); ++j) {
        if (inv.at(i, j).is_zero()) continue;
        if ((*cand_inv * inv.at(i, j)).weight() != m) return false;
    }
    return true;
}

// anchor block for a row of the inverse: the first non-null entry
std::optional<std::uint32_t> first_nonzero_block(const QcBlockMatrix& inv, std::uint32_t i) {
    for (std::uint32_t j = 0; j < inv.block_cols(); ++j)
        if (!inv.at(i, j).is_zero()) return j;
    return std::nullopt;
}

void push_unique(std::vector<OtdPolyCandidate>& out, std::uint32_t i, const RingPoly& q) {
    for (const auto& c : out)
        if (c.block_row == i && c.q == q) return;
    out.push_back({i, q});
}

}  // namespace

DualAttackResult dual_code_attack(const PublicKey& pk, const SternConfig& cfg) {
    const DenseMatrix gen = pk.g_pub.to_dense();
    const DenseMatrix dual = gen.null_space_basis();
    const std::uint32_t w = pk.params.dc() * pk.params.m;
    SternResult found = stern_search(dual, w, cfg);

    DualAttackResult out;
    out.iterations_run = found.iterations_run;
    for (auto& r : found.codewords) {
        if (gen.right_mul(r).any())
            throw std::logic_error("dual_code_attack: candidate not in the dual");
        out.rows.push_back(std::move(r));
    }
    return out;
}

std::optional<BitVec> decode_with_dual_row(const PublicKey& pk, const BitVec& dual_row,
                                           const BitVec& x) {
    const auto& pr = pk.params;
    if (dual_row.size() != pr.n() || x.size() != pr.n())
        throw std::invalid_argument("decode_with_dual_row: length mismatch");

    // one dual row spans the whole dual space through its block shifts
    QcBlockMatrix check(pr.p, 1, pr.n0);
    for (std::uint32_t j = 0; j < pr.n0; ++j) {
        RingPoly blk(pr.p);
        blk.coeffs() = dual_row.slice(std::size_t(j) * pr.p, pr.p);
        check.at(0, j) = blk;
    }

    SpaDecoder dec(check);
    DecoderConfig cfg;
    cfg.t = pr.t_prime;
    DecodeOutcome res = dec.decode(x, cfg);
    if (!res.success) return std::nullopt;
    return solve_in_row_space(pk.g_pub.to_dense(), res.codeword);
}

ExtendedCode build_extended_code(const PublicKey& pk, const BitVec& x, std::uint32_t r) {
    const auto& pr = pk.params;
    if (r < 1 || r > pr.p) throw std::invalid_argument("build_extended_code: need 1 <= r <= p");
    if (x.size() != pr.n()) throw std::invalid_argument("build_extended_code: bad ciphertext");

    DenseMatrix shifts(r, pr.n());
    for (std::uint32_t s = 0; s < r; ++s)
        shifts.set_row(s, vec_block_shift(x, pr.n0, s));
    return {pk.g_pub.to_dense().vstack(shifts), r};
}

std::optional<DecodingAttackResult> decoding_attack(const PublicKey& pk, const BitVec& x,
                                                    std::uint32_t r, const SternConfig& cfg) {
    const auto& pr = pk.params;
    const DenseMatrix gen = pk.g_pub.to_dense();

    if (pr.t_prime == 0) {
        auto u = solve_in_row_space(gen, x);
        if (!u) return std::nullopt;
        return DecodingAttackResult{BitVec(pr.n()), std::move(*u), 0};
    }

    ExtendedCode ext = build_extended_code(pk, x, r);
    SternConfig scfg = cfg;
    // a weight-w codeword meets each information-set half in at most w/2 rows
    scfg.g = std::max<std::uint32_t>(1, std::min(cfg.g, pr.t_prime / 2));
    scfg.stop_after = std::max<std::size_t>(cfg.stop_after, 4);
    SternResult found = stern_search(ext.gen, pr.t_prime, scfg);

    for (const auto& cw : found.codewords) {
        for (std::uint32_t s = 0; s < r; ++s) {
            BitVec e = vec_block_shift(cw, pr.n0, (pr.p - s) % pr.p);
            BitVec target = x;
            target ^= e;
            if (auto u = solve_in_row_space(gen, target))
                return DecodingAttackResult{std::move(e), std::move(*u), s};
        }
    }
    return std::nullopt;
}

std::optional<QcBlockMatrix> public_left_inverse(const PublicKey& pk) {
    const auto& pr = pk.params;
    QcBlockMatrix left(pr.p, pr.k0(), pr.k0());
    for (std::uint32_t i = 0; i < pr.k0(); ++i)
        for (std::uint32_t j = 0; j < pr.k0(); ++j) left.at(i, j) = pk.g_pub.at(i, j);
    return left.inverse();
}

std::vector<OtdPolyCandidate> otd_strategy1(const PublicKey& pk, std::uint64_t tuple_budget) {
    std::vector<OtdPolyCandidate> out;
    auto inv = public_left_inverse(pk);
    if (!inv) return out;

    const std::uint32_t m = pk.params.m;
    std::uint64_t used = 0;
    for (std::uint32_t i = 0; i < pk.params.k0(); ++i) {
        const auto anchor = first_nonzero_block(*inv, i);
        if (!anchor) continue;
        const auto supp = inv->at(i, *anchor).support();
        if (supp.size() < m) continue;
        for (Subsets sub(static_cast<std::uint32_t>(supp.size()), m); !sub.done; sub.next()) {
            if (++used > tuple_budget) return out;
            std::vector<std::uint32_t> exps(m);
            for (std::uint32_t a = 0; a < m; ++a) exps[a] = supp[sub.idx[a]];
            RingPoly cand = RingPoly::from_support(pk.params.p, exps);
            if (validate_q_candidate(cand, *inv, i, m)) push_unique(out, i, cand);
        }
    }
    return out;
}

std::vector<OtdPolyCandidate> otd_strategy2(const PublicKey& pk) {
    std::vector<OtdPolyCandidate> out;
    auto inv = public_left_inverse(pk);
    if (!inv) return out;

    const std::uint32_t m = pk.params.m;
    for (std::uint32_t i = 0; i < pk.params.k0(); ++i) {
        const auto anchor = first_nonzero_block(*inv, i);
        if (!anchor) continue;
        const RingPoly& g = inv->at(i, *anchor);
        for (std::uint32_t d = 1; d < pk.params.p; ++d) {
            RingPoly cand = hadamard(g, g.rotated(d));
            if (cand.weight() != m) continue;
            if (validate_q_candidate(cand, *inv, i, m)) push_unique(out, i, cand);
        }
    }
    return out;
}

std::vector<OtdRowCandidate> otd_strategy3(const PublicKey& pk, const SternConfig& cfg) {
    std::vector<OtdRowCandidate> out;
    auto inv = public_left_inverse(pk);
    if (!inv) return out;

    const auto& pr = pk.params;
    const std::uint32_t w = pr.m * (pr.n0 - 1);
    for (std::uint32_t i = 0; i < pr.k0(); ++i) {
        // null blocks contribute all-zero columns that no information set can
        // cover, so the search runs on the occupied blocks only
        std::vector<std::uint32_t> occupied;
        for (std::uint32_t j = 0; j < pr.k0(); ++j)
            if (!inv->at(i, j).is_zero()) occupied.push_back(j);
        if (occupied.empty()) continue;

        QcBlockMatrix row(pr.p, 1, std::uint32_t(occupied.size()));
        auto norm = inv->at(i, occupied.front()).inverse();
        for (std::uint32_t a = 0; a < occupied.size(); ++a)
            row.at(0, a) = norm ? *norm * inv->at(i, occupied[a]) : inv->at(i, occupied[a]);

        SternResult found;
        try {
            found = stern_search(row.to_dense(), w, cfg);
        } catch (const std::runtime_error&) {
            // a row whose code keeps dodging invertible information sets just
            // contributes nothing; the other rows still get their turn
            continue;
        }
        for (const auto& cw : found.codewords) {
            OtdRowCandidate cand{i, std::vector<RingPoly>(pr.k0(), RingPoly(pr.p))};
            bool any_hit = false, shape_ok = true;
            for (std::uint32_t a = 0; a < occupied.size(); ++a) {
                RingPoly blk(pr.p);
                blk.coeffs() = cw.slice(std::size_t(a) * pr.p, pr.p);
                if (blk.weight() == pr.m)
                    any_hit = true;
                else if (!blk.is_zero())
                    shape_ok = false;
                cand.s_row[occupied[a]] = std::move(blk);
            }
            if (any_hit && shape_ok) out.push_back(std::move(cand));
        }
    }
    return out;
}

std::optional<BitVec> solve_in_row_space(const DenseMatrix& gen, const BitVec& target) {
    const std::size_t k = gen.rows(), n = gen.cols();
    if (target.size() != n) throw std::invalid_argument("solve_in_row_space: length mismatch");

    // solve gen^T y = target^T by eliminating the augmented system
    DenseMatrix aug(n, k + 1);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < k; ++j)
            if (gen.get(j, i)) aug.set(i, j, true);
        if (target.get(i)) aug.set(i, k, true);
    }
    const auto pivots = aug.rref();
    BitVec u(k);
    for (std::size_t r = 0; r < pivots.size(); ++r) {
        if (pivots[r] == k) return std::nullopt;  // inconsistent
        u.set(pivots[r], aug.get(r, k));
    }
    return u;
}

}  // namespace qclm
