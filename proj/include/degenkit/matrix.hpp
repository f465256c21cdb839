#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "degenkit/error.hpp"
#include "degenkit/ratfunc.hpp"
#include "degenkit/scalar.hpp"
#include "degenkit/tpoly.hpp"

namespace degenkit {

/// Dense row-major matrix over an exact ring. Indices are 0-based here;
/// the algebra layer converts from the 1-based basis labels.
template <typename T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  static Matrix from_rows(const std::vector<std::vector<T>>& rows) {
    Matrix m(rows.size(), rows.empty() ? 0 : rows.front().size());
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (rows[r].size() != m.cols_) throw Error(ErrorCode::DimensionMismatch, "ragged matrix rows");
      for (std::size_t c = 0; c < m.cols_; ++c) m(r, c) = rows[r][c];
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<T> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const T> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

  std::vector<T> column(std::size_t c) const {
    std::vector<T> out(rows_);
    for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
    return out;
  }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
  }

  /// Rows of `other` appended below this matrix.
  Matrix stacked(const Matrix& other) const {
    if (rows_ != 0 && other.rows_ != 0 && cols_ != other.cols_)
      throw Error(ErrorCode::DimensionMismatch, "stacking matrices with different widths");
    Matrix out(rows_ + other.rows_, rows_ != 0 ? cols_ : other.cols_);
    std::copy(data_.begin(), data_.end(), out.data_.begin());
    std::copy(other.data_.begin(), other.data_.end(), out.data_.begin() + data_.size());
    return out;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw Error(ErrorCode::DimensionMismatch, "matrix product shape mismatch");
    Matrix out(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const T& aik = a(i, k);
        if (aik.is_zero()) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) {
          const T& bkj = b(k, j);
          if (!bkj.is_zero()) out(i, j) += aik * bkj;
        }
      }
    return out;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

template <typename T>
struct RrefResult {
  Matrix<T> reduced;
  std::size_t rank = 0;
  std::vector<std::size_t> pivot_cols;
};

/// Gauss-Jordan elimination to the unique reduced row-echelon form over a
/// field. Pivots are chosen as the first nonzero entry in column order, so the
/// output depends only on the row space.
template <typename T>
RrefResult<T> rref_generic(Matrix<T> m) {
  RrefResult<T> out;
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  std::size_t pivot_row = 0;
  std::vector<std::size_t> support;
  for (std::size_t col = 0; col < cols && pivot_row < rows; ++col) {
    std::size_t found = rows;
    for (std::size_t r = pivot_row; r < rows; ++r) {
      if (!m(r, col).is_zero()) {
        found = r;
        break;
      }
    }
    if (found == rows) continue;
    m.swap_rows(found, pivot_row);
    if (!(m(pivot_row, col) == T(1))) {
      T inv = T(1) / m(pivot_row, col);
      for (std::size_t c = col; c < cols; ++c)
        if (!m(pivot_row, c).is_zero()) m(pivot_row, c) *= inv;
    }
    support.clear();
    for (std::size_t c = col; c < cols; ++c)
      if (!m(pivot_row, c).is_zero()) support.push_back(c);
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == pivot_row || m(r, col).is_zero()) continue;
      T factor = m(r, col);
      for (std::size_t c : support) m(r, c) -= factor * m(pivot_row, c);
    }
    out.pivot_cols.push_back(col);
    ++pivot_row;
  }
  out.rank = pivot_row;
  out.reduced = std::move(m);
  return out;
}

/// Inverse over a field by Gauss-Jordan on [M | I]; throws Singular.
template <typename T>
Matrix<T> inverse_generic(const Matrix<T>& m) {
  if (!m.is_square()) throw Error(ErrorCode::DimensionMismatch, "inverse of a non-square matrix");
  const std::size_t n = m.rows();
  Matrix<T> aug(n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = m(r, c);
    aug(r, n + r) = T(1);
  }
  RrefResult<T> red = rref_generic(std::move(aug));
  if (red.rank < n || red.pivot_cols[n - 1] != n - 1)
    throw Error(ErrorCode::Singular, "matrix is not invertible");
  Matrix<T> inv(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) inv(r, c) = red.reduced(r, n + c);
  return inv;
}

using ScalarMatrix = Matrix<Scalar>;
using TMatrix = Matrix<TPoly>;
using RMatrix = Matrix<RationalFunctionT>;

/// Inverse of a matrix of Laurent polynomials over the rational-function field.
RMatrix tmatrix_inverse(const TMatrix& m);

/// Entrywise conversion of a rational-function matrix back to Laurent
/// polynomials; throws NotLaurent if some denominator is not 1.
TMatrix to_laurent(const RMatrix& m);
RMatrix to_rational(const TMatrix& m);

}  // namespace degenkit
