#include "qclm/qc.hpp"

#include <stdexcept>

namespace qclm {

QcBlockMatrix QcBlockMatrix::operator*(const QcBlockMatrix& o) const {
    if (bc_ != o.br_ || p_ != o.p_) throw std::invalid_argument("qc shape mismatch");
    QcBlockMatrix out(p_, br_, o.bc_);
    for (std::size_t i = 0; i < br_; ++i)
        for (std::size_t k = 0; k < bc_; ++k) {
            if (at(i, k).is_zero()) continue;
            for (std::size_t j = 0; j < o.bc_; ++j)
                out.at(i, j) += at(i, k) * o.at(k, j);
        }
    return out;
}

QcBlockMatrix QcBlockMatrix::operator+(const QcBlockMatrix& o) const {
    if (br_ != o.br_ || bc_ != o.bc_ || p_ != o.p_)
        throw std::invalid_argument("qc shape mismatch");
    QcBlockMatrix out = *this;
    for (std::size_t i = 0; i < b_.size(); ++i) out.b_[i] += o.b_[i];
    return out;
}

QcBlockMatrix QcBlockMatrix::transposed() const {
    QcBlockMatrix out(p_, bc_, br_);
    for (std::size_t i = 0; i < br_; ++i)
        for (std::size_t j = 0; j < bc_; ++j)
            out.at(j, i) = at(i, j).transposed();
    return out;
}

std::optional<QcBlockMatrix> QcBlockMatrix::inverse() const {
    if (br_ != bc_) throw std::invalid_argument("inverse of non-square qc matrix");
    const std::size_t n = br_;
    QcBlockMatrix m = *this;
    QcBlockMatrix inv = identity(p_, n);
    std::vector<std::pair<std::size_t, std::size_t>> col_swaps;

    auto swap_block_rows = [&](QcBlockMatrix& mat, std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t j = 0; j < n; ++j) std::swap(mat.at(a, j), mat.at(b, j));
    };
    auto swap_block_cols = [&](QcBlockMatrix& mat, std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t i = 0; i < n; ++i) std::swap(mat.at(i, a), mat.at(i, b));
    };

    for (std::size_t s = 0; s < n; ++s) {
        std::optional<RingPoly> pivot_inv;
        std::size_t pi = s, pj = s;
        for (std::size_t j = s; j < n && !pivot_inv; ++j)
            for (std::size_t i = s; i < n && !pivot_inv; ++i) {
                if (m.at(i, j).is_zero()) continue;
                if (auto candidate = m.at(i, j).inverse()) {
                    pivot_inv = std::move(candidate);
                    pi = i;
                    pj = j;
                }
            }
        if (!pivot_inv) return std::nullopt;  // stalled: no invertible pivot left
        swap_block_rows(m, s, pi);
        swap_block_rows(inv, s, pi);
        if (pj != s) {
            swap_block_cols(m, s, pj);
            col_swaps.emplace_back(s, pj);
        }
        for (std::size_t j = 0; j < n; ++j) {
            m.at(s, j) = *pivot_inv * m.at(s, j);
            inv.at(s, j) = *pivot_inv * inv.at(s, j);
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == s || m.at(i, s).is_zero()) continue;
            const RingPoly f = m.at(i, s);
            for (std::size_t j = 0; j < n; ++j) {
                m.at(i, j) += f * m.at(s, j);
                inv.at(i, j) += f * inv.at(s, j);
            }
        }
    }
    // column swaps on M are row swaps on the inverse, applied in reverse
    for (auto it = col_swaps.rbegin(); it != col_swaps.rend(); ++it)
        swap_block_rows(inv, it->first, it->second);
    return inv;
}

DenseMatrix QcBlockMatrix::to_dense() const {
    DenseMatrix out(rows(), cols());
    for (std::size_t bi = 0; bi < br_; ++bi)
        for (std::uint32_t r = 0; r < p_; ++r) {
            BitVec rowv(cols());
            for (std::size_t bj = 0; bj < bc_; ++bj)
                if (!at(bi, bj).is_zero())
                    rowv.paste(bj * p_, at(bi, bj).rotated(r).coeffs());
            out.set_row(bi * p_ + r, rowv);
        }
    return out;
}

std::optional<QcBlockMatrix> QcBlockMatrix::from_dense(const DenseMatrix& d, std::uint32_t p) {
    if (p == 0 || d.rows() % p || d.cols() % p) return std::nullopt;
    QcBlockMatrix out(p, d.rows() / p, d.cols() / p);
    for (std::size_t bi = 0; bi < out.br_; ++bi)
        for (std::size_t bj = 0; bj < out.bc_; ++bj) {
            RingPoly first(p);
            for (std::uint32_t c = 0; c < p; ++c)
                if (d.get(bi * p, bj * p + c)) first.set_coeff(c, true);
            for (std::uint32_t r = 1; r < p; ++r) {
                const RingPoly expect = first.rotated(r);
                for (std::uint32_t c = 0; c < p; ++c)
                    if (d.get(bi * p + r, bj * p + c) != expect.coeff(c))
                        return std::nullopt;  // not circulant
            }
            out.at(bi, bj) = first;
        }
    return out;
}

BitVec QcBlockMatrix::left_mul(const BitVec& v) const {
    if (v.size() != rows()) throw std::invalid_argument("vector length mismatch");
    BitVec out(cols());
    for (std::size_t bj = 0; bj < bc_; ++bj) {
        RingPoly acc(p_);
        for (std::size_t bi = 0; bi < br_; ++bi) {
            RingPoly u(p_);
            u.coeffs() = v.slice(bi * p_, p_);
            acc += u * at(bi, bj);
        }
        out.paste(bj * p_, acc.coeffs());
    }
    return out;
}

BitVec vec_block_shift(const BitVec& v, std::size_t blocks, std::uint32_t s) {
    if (blocks == 0 || v.size() % blocks) throw std::invalid_argument("bad block count");
    const std::uint32_t p = std::uint32_t(v.size() / blocks);
    BitVec out(v.size());
    for (std::size_t b = 0; b < blocks; ++b) {
        RingPoly poly(p);
        poly.coeffs() = v.slice(b * p, p);
        out.paste(b * p, poly.rotated(s).coeffs());
    }
    return out;
}

}  // namespace qclm
