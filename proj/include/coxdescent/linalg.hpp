#pragma once

#include "coxdescent/field.hpp"

#include <cstddef>
#include <vector>

namespace coxdescent {

/// Dense row-major matrix over a finite field.
class DenseMatrix {
public:
    DenseMatrix(const FieldTower& field, std::size_t rows, std::size_t cols);

    const FieldTower& field() const noexcept { return *field_; }
    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    FieldElement& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const FieldElement& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    void swap_rows(std::size_t a, std::size_t b);
    /// Drops rows past `n`.
    void truncate(std::size_t n);

    friend bool operator==(const DenseMatrix& a, const DenseMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

private:
    const FieldTower* field_;
    std::size_t rows_;
    std::size_t cols_;
    std::vector<FieldElement> data_;
};

/// Brings `m` to reduced row echelon form in place and drops zero rows.
/// Returns the pivot column of each remaining row. Rows below and above
/// each pivot are cleared in parallel with OpenMP; the result is
/// bit-identical to row_reduce_serial for every thread count.
std::vector<std::size_t> row_reduce(DenseMatrix& m);

/// Single-threaded reference implementation of row_reduce.
std::vector<std::size_t> row_reduce_serial(DenseMatrix& m);

/// Basis of { x : m x = 0 }, one vector per free column, in increasing
/// free-column order.
std::vector<std::vector<FieldElement>> nullspace(const DenseMatrix& m);

std::size_t rank(DenseMatrix m);

} // namespace coxdescent
