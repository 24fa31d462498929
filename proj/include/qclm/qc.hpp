#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "qclm/dense.hpp"
#include "qclm/ring.hpp"

namespace qclm {

// Block matrix of p x p circulants, each block held as its defining polynomial.
class QcBlockMatrix {
public:
    QcBlockMatrix() : p_(0), br_(0), bc_(0) {}
    QcBlockMatrix(std::uint32_t p, std::size_t block_rows, std::size_t block_cols)
        : p_(p), br_(block_rows), bc_(block_cols), b_(block_rows * block_cols, RingPoly(p)) {}

    static QcBlockMatrix identity(std::uint32_t p, std::size_t n) {
        QcBlockMatrix m(p, n, n);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = RingPoly::one(p);
        return m;
    }

    std::uint32_t modulus() const { return p_; }
    std::size_t block_rows() const { return br_; }
    std::size_t block_cols() const { return bc_; }
    std::size_t rows() const { return br_ * p_; }
    std::size_t cols() const { return bc_ * p_; }

    RingPoly& at(std::size_t i, std::size_t j) { return b_[i * bc_ + j]; }
    const RingPoly& at(std::size_t i, std::size_t j) const { return b_[i * bc_ + j]; }

    bool operator==(const QcBlockMatrix&) const = default;

    QcBlockMatrix operator*(const QcBlockMatrix& o) const;
    QcBlockMatrix operator+(const QcBlockMatrix& o) const;
    QcBlockMatrix transposed() const;

    // block Gauss-Jordan with pivots restricted to invertible blocks;
    // empty when elimination stalls (caller resamples)
    std::optional<QcBlockMatrix> inverse() const;

    DenseMatrix to_dense() const;
    // round-trip check: every row of every block must be the rotated first row
    static std::optional<QcBlockMatrix> from_dense(const DenseMatrix& d, std::uint32_t p);

    // v * M for a row vector of block_rows()*p bits
    BitVec left_mul(const BitVec& v) const;

    std::size_t total_weight() const {
        std::size_t w = 0;
        for (const auto& poly : b_) w += poly.weight();
        return w;
    }

private:
    std::uint32_t p_;
    std::size_t br_, bc_;
    std::vector<RingPoly> b_;
};

// per-block rotation of a block-structured row vector (multiply each block by x^s)
BitVec vec_block_shift(const BitVec& v, std::size_t blocks, std::uint32_t s);

}  // namespace qclm
