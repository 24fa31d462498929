#include "qclm/dense.hpp"

#include <stdexcept>

namespace qclm {

DenseMatrix DenseMatrix::transposed() const {
    DenseMatrix out(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if (get(i, j)) out.set(j, i, true);
    return out;
}

DenseMatrix DenseMatrix::operator*(const DenseMatrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("matrix shape mismatch");
    DenseMatrix out(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
        BitVec acc(o.cols_);
        for (std::size_t j = 0; j < cols_; ++j)
            if (get(i, j)) o.xor_row_into(j, acc);
        out.set_row(i, acc);
    }
    return out;
}

BitVec DenseMatrix::left_mul(const BitVec& v) const {
    if (v.size() != rows_) throw std::invalid_argument("vector length mismatch");
    BitVec acc(cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        if (v.get(i)) xor_row_into(i, acc);
    return acc;
}

BitVec DenseMatrix::right_mul(const BitVec& v) const {
    if (v.size() != cols_) throw std::invalid_argument("vector length mismatch");
    BitVec out(rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
        BitVec r = row(i);
        r &= v;
        out.set(i, r.weight() & 1);
    }
    return out;
}

std::vector<std::size_t> DenseMatrix::rref() {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
        std::size_t sel = r;
        while (sel < rows_ && !get(sel, c)) ++sel;
        if (sel == rows_) continue;
        swap_rows(r, sel);
        for (std::size_t i = 0; i < rows_; ++i)
            if (i != r && get(i, c)) row_xor(i, r);
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

std::size_t DenseMatrix::rank() const {
    DenseMatrix tmp = *this;
    return tmp.rref().size();
}

std::optional<DenseMatrix> DenseMatrix::inverse() const {
    if (rows_ != cols_) throw std::invalid_argument("inverse of non-square matrix");
    DenseMatrix a = *this;
    DenseMatrix inv = identity(rows_);
    for (std::size_t c = 0; c < cols_; ++c) {
        std::size_t sel = c;
        while (sel < rows_ && !a.get(sel, c)) ++sel;
        if (sel == rows_) return std::nullopt;
        a.swap_rows(c, sel);
        inv.swap_rows(c, sel);
        for (std::size_t i = 0; i < rows_; ++i) {
            if (i != c && a.get(i, c)) {
                a.row_xor(i, c);
                inv.row_xor(i, c);
            }
        }
    }
    return inv;
}

DenseMatrix DenseMatrix::null_space_basis() const {
    DenseMatrix r = *this;
    auto pivots = r.rref();
    std::vector<bool> is_pivot(cols_, false);
    for (auto c : pivots) is_pivot[c] = true;
    std::vector<std::size_t> free_cols;
    for (std::size_t c = 0; c < cols_; ++c)
        if (!is_pivot[c]) free_cols.push_back(c);
    DenseMatrix h(free_cols.size(), cols_);
    for (std::size_t fi = 0; fi < free_cols.size(); ++fi) {
        h.set(fi, free_cols[fi], true);
        for (std::size_t pi = 0; pi < pivots.size(); ++pi)
            if (r.get(pi, free_cols[fi])) h.set(fi, pivots[pi], true);
    }
    return h;
}

DenseMatrix DenseMatrix::submatrix_cols(const std::vector<std::uint32_t>& cols) const {
    DenseMatrix out(rows_, cols.size());
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols.size(); ++j)
            if (get(i, cols[j])) out.set(i, j, true);
    return out;
}

DenseMatrix DenseMatrix::vstack(const DenseMatrix& below) const {
    if (below.cols_ != cols_) throw std::invalid_argument("vstack width mismatch");
    DenseMatrix out(rows_ + below.rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i) out.set_row(i, row(i));
    for (std::size_t i = 0; i < below.rows_; ++i) out.set_row(rows_ + i, below.row(i));
    return out;
}

}  // namespace qclm
