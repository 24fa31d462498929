#include "qclm/stern.hpp"

#include <set>
#include <stdexcept>
#include <unordered_map>

namespace qclm {

namespace {

struct Iteration {
    DenseMatrix reduced;           // basis in quasi-systematic form over the info set
    std::vector<std::uint32_t> window;  // l column indices outside the info set
};

// combination walker over [0, n) choosing g
struct Combos {
    std::vector<std::uint32_t> idx;
    std::uint32_t n;
    bool done = false;

    Combos(std::uint32_t n_, std::uint32_t g) : idx(g), n(n_) {
        if (g > n_) {
            done = true;
            return;
        }
        for (std::uint32_t i = 0; i < g; ++i) idx[i] = i;
    }

    void next() {
        const std::uint32_t g = std::uint32_t(idx.size());
        std::uint32_t i = g;
        while (i-- > 0) {
            if (idx[i] < n - g + i) {
                ++idx[i];
                for (std::uint32_t j = i + 1; j < g; ++j) idx[j] = idx[j - 1] + 1;
                return;
            }
        }
        done = true;
    }
};

class SternEngine {
public:
    SternEngine(const DenseMatrix& gen, std::uint32_t w, const SternConfig& cfg)
        : w_(w), cfg_(cfg), rng_(cfg.seed) {
        DenseMatrix reduced = gen;
        const auto pivots = reduced.rref();
        k_ = pivots.size();
        n_ = gen.cols();
        basis_ = DenseMatrix(k_, n_);
        for (std::size_t i = 0; i < k_; ++i) basis_.set_row(i, reduced.row(i));
        if (k_ > 0) {
            if (cfg.g == 0 || 2 * std::size_t(cfg.g) > k_)
                throw std::invalid_argument("need 0 < 2g <= code dimension");
            if (cfg.l == 0 || cfg.l > 64 || std::size_t(cfg.l) > n_ - k_)
                throw std::invalid_argument("need 0 < l <= min(n-k, 64)");
        }
    }

    bool degenerate() const { return k_ == 0; }
    std::size_t half_x() const { return (k_ + 1) / 2; }

    // one iteration; returns candidates surfaced by the collision stage
    std::vector<BitVec> iterate(std::uint64_t* collisions) {
        Iteration it = draw();
        std::vector<BitVec> found;
        const std::size_t hx = half_x();
        // l-bit window key per reduced row
        std::vector<std::uint64_t> key(k_, 0);
        for (std::size_t r = 0; r < k_; ++r)
            for (std::size_t b = 0; b < it.window.size(); ++b)
                if (it.reduced.get(r, it.window[b])) key[r] |= 1ULL << b;

        std::unordered_map<std::uint64_t, std::vector<std::vector<std::uint32_t>>> table;
        for (Combos cx(std::uint32_t(hx), cfg_.g); !cx.done; cx.next()) {
            std::uint64_t kx = 0;
            for (auto i : cx.idx) kx ^= key[i];
            table[kx].push_back(cx.idx);
        }
        for (Combos cy(std::uint32_t(k_ - hx), cfg_.g); !cy.done; cy.next()) {
            std::uint64_t ky = 0;
            for (auto i : cy.idx) ky ^= key[hx + i];
            auto hit = table.find(ky);
            if (hit == table.end()) continue;
            for (const auto& xs : hit->second) {
                if (collisions) ++*collisions;
                BitVec cw(n_);
                for (auto i : xs) it.reduced.xor_row_into(i, cw);
                for (auto i : cy.idx) it.reduced.xor_row_into(hx + i, cw);
                const std::size_t wt = cw.weight();
                if (wt > 0 && wt <= w_) found.push_back(std::move(cw));
            }
        }
        return found;
    }

private:
    Iteration draw() {
        for (std::uint32_t attempt = 0; attempt < cfg_.info_set_retries; ++attempt) {
            const auto cols = rng_.distinct(std::uint32_t(k_ + cfg_.l), std::uint32_t(n_));
            std::vector<std::uint32_t> info(cols.begin(), cols.begin() + k_);
            const DenseMatrix sub = basis_.submatrix_cols(info);
            auto inv = sub.inverse();
            if (!inv) continue;
            Iteration it;
            it.reduced = *inv * basis_;
            it.window.assign(cols.begin() + k_, cols.end());
            return it;
        }
        throw std::runtime_error("no invertible information set found");
    }

    std::uint32_t w_;
    SternConfig cfg_;
    Rng rng_;
    std::size_t k_ = 0, n_ = 0;
    DenseMatrix basis_;
};

}  // namespace

SternResult stern_search(const DenseMatrix& gen, std::uint32_t w, const SternConfig& cfg) {
    if (w == 0 || w > gen.cols()) throw std::invalid_argument("need 0 < w <= n");
    SternEngine engine(gen, w, cfg);
    SternResult res;
    if (engine.degenerate()) return res;
    std::set<std::vector<std::uint32_t>> seen;
    for (std::uint64_t iter = 0; iter < cfg.max_iterations; ++iter) {
        res.iterations_run = iter + 1;
        for (auto& cw : engine.iterate(&res.collisions_checked)) {
            if (seen.insert(cw.support()).second) res.codewords.push_back(std::move(cw));
        }
        if (res.codewords.size() >= cfg.stop_after) break;
    }
    return res;
}

std::uint64_t stern_success_count(const DenseMatrix& gen, std::uint32_t w,
                                  const SternConfig& cfg) {
    SternEngine engine(gen, w, cfg);
    if (engine.degenerate()) return 0;
    std::uint64_t successes = 0;
    for (std::uint64_t iter = 0; iter < cfg.max_iterations; ++iter)
        if (!engine.iterate(nullptr).empty()) ++successes;
    return successes;
}

}  // namespace qclm
