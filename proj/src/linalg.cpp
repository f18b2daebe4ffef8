#include "coxdescent/linalg.hpp"

#include "coxdescent/errors.hpp"

#include <utility>

namespace coxdescent {

DenseMatrix::DenseMatrix(const FieldTower& field, std::size_t rows, std::size_t cols)
    : field_(&field), rows_(rows), cols_(cols), data_(rows * cols, field.zero()) {}

void DenseMatrix::swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t c = 0; c < cols_; ++c) std::swap(data_[a * cols_ + c], data_[b * cols_ + c]);
}

void DenseMatrix::truncate(std::size_t n) {
    if (n >= rows_) return;
    rows_ = n;
    data_.resize(rows_ * cols_);
}

namespace {

// row[target] -= factor * row[pivot_row], columns from `from` on.
void eliminate_row(DenseMatrix& m, std::size_t target, std::size_t pivot_row, std::size_t from) {
    const FieldTower& F = m.field();
    const FieldElement factor = m.at(target, from);
    if (F.is_zero(factor)) return;
    for (std::size_t c = from; c < m.cols(); ++c) {
        const FieldElement& p = m.at(pivot_row, c);
        if (F.is_zero(p)) continue;
        m.at(target, c) = F.sub(m.at(target, c), F.mul(factor, p));
    }
}

// Moves the pivot into place and normalizes it. Returns false when column
// `col` has no pivot at or below `row`.
bool prepare_pivot(DenseMatrix& m, std::size_t row, std::size_t col) {
    const FieldTower& F = m.field();
    std::size_t found = m.rows();
    for (std::size_t r = row; r < m.rows(); ++r) {
        if (!F.is_zero(m.at(r, col))) {
            found = r;
            break;
        }
    }
    if (found == m.rows()) return false;
    m.swap_rows(row, found);
    const FieldElement inv = F.inv(m.at(row, col));
    for (std::size_t c = col; c < m.cols(); ++c) m.at(row, c) = F.mul(m.at(row, c), inv);
    return true;
}

} // namespace

std::vector<std::size_t> row_reduce_serial(DenseMatrix& m) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        if (!prepare_pivot(m, row, col)) continue;
        for (std::size_t r = 0; r < m.rows(); ++r) {
            if (r != row) eliminate_row(m, r, row, col);
        }
        pivots.push_back(col);
        ++row;
    }
    m.truncate(row);
    return pivots;
}

std::vector<std::size_t> row_reduce(DenseMatrix& m) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    const auto nrows = static_cast<long long>(m.rows());
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        if (!prepare_pivot(m, row, col)) continue;
        // Each target row is touched by exactly one thread and only reads
        // the pivot row, so the arithmetic matches the serial loop.
#pragma omp parallel for schedule(static) if (nrows * static_cast<long long>(m.cols()) > 4096)
        for (long long r = 0; r < nrows; ++r) {
            if (static_cast<std::size_t>(r) != row) eliminate_row(m, static_cast<std::size_t>(r), row, col);
        }
        pivots.push_back(col);
        ++row;
    }
    m.truncate(row);
    return pivots;
}

std::vector<std::vector<FieldElement>> nullspace(const DenseMatrix& m) {
    DenseMatrix r = m;
    const std::vector<std::size_t> pivots = row_reduce(r);
    const FieldTower& F = m.field();
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto c : pivots) is_pivot[c] = true;
    std::vector<std::vector<FieldElement>> basis;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        std::vector<FieldElement> v(m.cols(), F.zero());
        v[free] = F.one();
        for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = F.neg(r.at(i, free));
        basis.push_back(std::move(v));
    }
    return basis;
}

std::size_t rank(DenseMatrix m) { return row_reduce(m).size(); }

} // namespace coxdescent
