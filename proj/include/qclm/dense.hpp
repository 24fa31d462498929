#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "qclm/bitvec.hpp"

namespace qclm {

// Dense GF(2) matrix, rows packed into 64-bit words.
class DenseMatrix {
public:
    DenseMatrix() : rows_(0), cols_(0), wpr_(0) {}
    DenseMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), wpr_((cols + 63) / 64), w_(rows * wpr_, 0) {}

    static DenseMatrix identity(std::size_t n) {
        DenseMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m.set(i, i, true);
        return m;
    }

    static DenseMatrix random(std::size_t rows, std::size_t cols, Rng& rng) {
        DenseMatrix m(rows, cols);
        for (std::size_t i = 0; i < rows * m.wpr_; ++i) m.w_[i] = rng.next();
        m.mask_rows();
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    bool get(std::size_t i, std::size_t j) const {
        return (w_[i * wpr_ + (j >> 6)] >> (j & 63)) & 1;
    }

    void set(std::size_t i, std::size_t j, bool v) {
        const std::uint64_t m = 1ULL << (j & 63);
        if (v)
            w_[i * wpr_ + (j >> 6)] |= m;
        else
            w_[i * wpr_ + (j >> 6)] &= ~m;
    }

    void row_xor(std::size_t dst, std::size_t src) {
        for (std::size_t k = 0; k < wpr_; ++k) w_[dst * wpr_ + k] ^= w_[src * wpr_ + k];
    }

    void swap_rows(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t k = 0; k < wpr_; ++k)
            std::swap(w_[a * wpr_ + k], w_[b * wpr_ + k]);
    }

    BitVec row(std::size_t i) const {
        BitVec v(cols_);
        auto dst = v.words();
        for (std::size_t k = 0; k < wpr_; ++k) dst[k] = w_[i * wpr_ + k];
        return v;
    }

    void set_row(std::size_t i, const BitVec& v) {
        auto src = v.words();
        for (std::size_t k = 0; k < wpr_; ++k) w_[i * wpr_ + k] = src[k];
    }

    void xor_row_into(std::size_t i, BitVec& acc) const {
        auto dst = acc.words();
        for (std::size_t k = 0; k < wpr_; ++k) dst[k] ^= w_[i * wpr_ + k];
    }

    bool operator==(const DenseMatrix&) const = default;

    DenseMatrix transposed() const;
    DenseMatrix operator*(const DenseMatrix& o) const;

    // v * M for a length-rows() row vector
    BitVec left_mul(const BitVec& v) const;
    // M * v^T for a length-cols() vector
    BitVec right_mul(const BitVec& v) const;

    std::size_t rank() const;
    std::optional<DenseMatrix> inverse() const;

    // reduced row echelon form; returns pivot column per pivot row
    std::vector<std::size_t> rref();

    // parity-check matrix H with M * H^T = 0, rows(H) = cols - rank
    DenseMatrix null_space_basis() const;

    DenseMatrix submatrix_cols(const std::vector<std::uint32_t>& cols) const;
    DenseMatrix vstack(const DenseMatrix& below) const;

private:
    void mask_rows() {
        if (cols_ & 63) {
            const std::uint64_t m = (1ULL << (cols_ & 63)) - 1;
            for (std::size_t i = 0; i < rows_; ++i) w_[i * wpr_ + wpr_ - 1] &= m;
        }
    }

    std::size_t rows_, cols_, wpr_;
    std::vector<std::uint64_t> w_;
};

}  // namespace qclm
