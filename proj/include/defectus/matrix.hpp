#pragma once

#include <vector>

#include "defectus/scalar.hpp"

namespace defectus {

/// Rectangular matrix over the DVR. Entries share one backend; dimensions positive.
class Matrix {
public:
    Matrix(const Backend& bk, int rows, int cols);

    static Matrix identity(const Backend& bk, int n);
    static Matrix from_ints(const Backend& bk, const std::vector<std::vector<long>>& grid);
    static Matrix from_scalars(const Backend& bk, int rows, int cols, std::vector<Scalar> entries);

    const Backend& backend() const { return bk_; }
    int rows() const { return rows_; }
    int cols() const { return cols_; }

    const Scalar& at(int i, int j) const { return e_[static_cast<size_t>(i) * cols_ + j]; }
    void set(int i, int j, Scalar v);

    Matrix submatrix(const std::vector<int>& row_idx, const std::vector<int>& col_idx) const;
    /// Contiguous column slice [first, first + count), all rows.
    Matrix column_block(int first, int count) const;

    void swap_rows(int a, int b);
    void swap_cols(int a, int b);
    /// row[dst] += f * row[src]
    void add_row_multiple(int dst, int src, const Scalar& f);
    /// col[dst] += f * col[src]
    void add_col_multiple(int dst, int src, const Scalar& f);
    void scale_row(int i, const Scalar& u);

    Matrix operator*(const Matrix& o) const;
    bool operator==(const Matrix& o) const;
    bool operator!=(const Matrix& o) const { return !(*this == o); }

private:
    Backend bk_;
    int rows_, cols_;
    std::vector<Scalar> e_;
};

} // namespace defectus
