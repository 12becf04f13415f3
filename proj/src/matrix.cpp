#include "defectus/matrix.hpp"

#include <utility>

namespace defectus {

Matrix::Matrix(const Backend& bk, int rows, int cols)
    : bk_(bk), rows_(rows), cols_(cols),
      e_(static_cast<size_t>(rows) * static_cast<size_t>(cols), Scalar::zero(bk)) {
    if (rows < 1 || cols < 1)
        throw Error(ErrorCode::bad_input, "matrix dimensions must be positive");
}

Matrix Matrix::identity(const Backend& bk, int n) {
    Matrix M(bk, n, n);
    for (int i = 0; i < n; ++i) M.set(i, i, Scalar::one(bk));
    return M;
}

Matrix Matrix::from_ints(const Backend& bk, const std::vector<std::vector<long>>& grid) {
    if (grid.empty() || grid[0].empty())
        throw Error(ErrorCode::bad_input, "matrix dimensions must be positive");
    Matrix M(bk, static_cast<int>(grid.size()), static_cast<int>(grid[0].size()));
    for (int i = 0; i < M.rows(); ++i) {
        if (static_cast<int>(grid[i].size()) != M.cols())
            throw Error(ErrorCode::bad_input, "ragged matrix rows");
        for (int j = 0; j < M.cols(); ++j) M.set(i, j, Scalar::from_int(bk, grid[i][j]));
    }
    return M;
}

Matrix Matrix::from_scalars(const Backend& bk, int rows, int cols, std::vector<Scalar> entries) {
    Matrix M(bk, rows, cols);
    if (entries.size() != static_cast<size_t>(rows) * static_cast<size_t>(cols))
        throw Error(ErrorCode::bad_input, "entry count does not match dimensions");
    for (auto& s : entries)
        if (s.backend() != bk)
            throw Error(ErrorCode::backend_mismatch, "entry backend differs from matrix backend");
    M.e_ = std::move(entries);
    return M;
}

void Matrix::set(int i, int j, Scalar v) {
    if (v.backend() != bk_)
        throw Error(ErrorCode::backend_mismatch, "entry backend differs from matrix backend");
    e_[static_cast<size_t>(i) * cols_ + j] = std::move(v);
}

Matrix Matrix::submatrix(const std::vector<int>& row_idx, const std::vector<int>& col_idx) const {
    Matrix M(bk_, static_cast<int>(row_idx.size()), static_cast<int>(col_idx.size()));
    for (size_t i = 0; i < row_idx.size(); ++i)
        for (size_t j = 0; j < col_idx.size(); ++j)
            M.set(static_cast<int>(i), static_cast<int>(j), at(row_idx[i], col_idx[j]));
    return M;
}

Matrix Matrix::column_block(int first, int count) const {
    Matrix M(bk_, rows_, count);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < count; ++j) M.set(i, j, at(i, first + j));
    return M;
}

void Matrix::swap_rows(int a, int b) {
    if (a == b) return;
    for (int j = 0; j < cols_; ++j)
        std::swap(e_[static_cast<size_t>(a) * cols_ + j], e_[static_cast<size_t>(b) * cols_ + j]);
}

void Matrix::swap_cols(int a, int b) {
    if (a == b) return;
    for (int i = 0; i < rows_; ++i)
        std::swap(e_[static_cast<size_t>(i) * cols_ + a], e_[static_cast<size_t>(i) * cols_ + b]);
}

void Matrix::add_row_multiple(int dst, int src, const Scalar& f) {
    for (int j = 0; j < cols_; ++j) set(dst, j, at(dst, j) + f * at(src, j));
}

void Matrix::add_col_multiple(int dst, int src, const Scalar& f) {
    for (int i = 0; i < rows_; ++i) set(i, dst, at(i, dst) + f * at(i, src));
}

void Matrix::scale_row(int i, const Scalar& u) {
    for (int j = 0; j < cols_; ++j) set(i, j, u * at(i, j));
}

Matrix Matrix::operator*(const Matrix& o) const {
    if (bk_ != o.bk_)
        throw Error(ErrorCode::backend_mismatch, "matrix product across backends");
    if (cols_ != o.rows_)
        throw Error(ErrorCode::dimension_mismatch, "inner dimensions disagree");
    Matrix M(bk_, rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < o.cols_; ++j) {
            Scalar acc = Scalar::zero(bk_);
            for (int k = 0; k < cols_; ++k) acc = acc + at(i, k) * o.at(k, j);
            M.set(i, j, std::move(acc));
        }
    return M;
}

bool Matrix::operator==(const Matrix& o) const {
    if (bk_ != o.bk_ || rows_ != o.rows_ || cols_ != o.cols_) return false;
    for (size_t idx = 0; idx < e_.size(); ++idx)
        if (e_[idx] != o.e_[idx]) return false;
    return true;
}

} // namespace defectus
