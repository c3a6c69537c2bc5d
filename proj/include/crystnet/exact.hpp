#pragma once

// Exact scalars and dense matrices over Z and Q.

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "crystnet/error.hpp"

namespace crystnet {

using Int = mpz_class;
using Rat = mpq_class;
using IntVector = std::vector<Int>;
using RatVector = std::vector<Rat>;

template <typename T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  Matrix(std::initializer_list<std::initializer_list<T>> init) {
    rows_ = init.size();
    cols_ = rows_ == 0 ? 0 : init.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& row : init) {
      if (row.size() != cols_) throw Error(ErrorCode::DimensionMismatch, "ragged matrix literal");
      for (const auto& x : row) data_.push_back(x);
    }
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  static Matrix from_columns(std::size_t rows, const std::vector<std::vector<T>>& cols) {
    Matrix m(rows, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
      if (cols[j].size() != rows) throw Error(ErrorCode::DimensionMismatch, "column length");
      for (std::size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
    }
    return m;
  }

  static Matrix from_rows(std::size_t cols, const std::vector<std::vector<T>>& rows) {
    Matrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != cols) throw Error(ErrorCode::DimensionMismatch, "row length");
      for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::vector<T> row(std::size_t i) const {
    return std::vector<T>(data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_);
  }
  std::vector<T> column(std::size_t j) const {
    std::vector<T> c(rows_);
    for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
    return c;
  }
  std::vector<std::vector<T>> columns() const {
    std::vector<std::vector<T>> out;
    out.reserve(cols_);
    for (std::size_t j = 0; j < cols_; ++j) out.push_back(column(j));
    return out;
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  /// Columns [first, first + count).
  Matrix column_block(std::size_t first, std::size_t count) const {
    Matrix b(rows_, count);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < count; ++j) b(i, j) = (*this)(i, first + j);
    return b;
  }
  Matrix row_block(std::size_t first, std::size_t count) const {
    Matrix b(count, cols_);
    for (std::size_t i = 0; i < count; ++i)
      for (std::size_t j = 0; j < cols_; ++j) b(i, j) = (*this)(first + i, j);
    return b;
  }

  void swap_columns(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
  }
  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
  }

  bool is_zero() const {
    for (const auto& x : data_)
      if (x != 0) return false;
    return true;
  }

  bool operator==(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) return false;
    for (std::size_t k = 0; k < data_.size(); ++k)
      if (data_[k] != o.data_[k]) return false;
    return true;
  }
  bool operator!=(const Matrix& o) const { return !(*this == o); }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using IntMatrix = Matrix<Int>;
using RatMatrix = Matrix<Rat>;

template <typename T>
Matrix<T> operator*(const Matrix<T>& a, const Matrix<T>& b) {
  if (a.cols() != b.rows()) throw Error(ErrorCode::DimensionMismatch, "matrix product");
  Matrix<T> c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += a(i, k) * b(k, j);
    }
  return c;
}

template <typename T>
std::vector<T> operator*(const Matrix<T>& a, const std::vector<T>& x) {
  if (a.cols() != x.size()) throw Error(ErrorCode::DimensionMismatch, "matrix-vector product");
  std::vector<T> y(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) y[i] += a(i, k) * x[k];
  return y;
}

template <typename T>
Matrix<T> operator+(const Matrix<T>& a, const Matrix<T>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw Error(ErrorCode::DimensionMismatch, "matrix sum");
  Matrix<T> c(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = a(i, j) + b(i, j);
  return c;
}

template <typename T>
Matrix<T> operator-(const Matrix<T>& a, const Matrix<T>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw Error(ErrorCode::DimensionMismatch, "matrix difference");
  Matrix<T> c(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = a(i, j) - b(i, j);
  return c;
}

template <typename T>
Matrix<T> scaled(const Matrix<T>& a, const T& s) {
  Matrix<T> c(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = a(i, j) * s;
  return c;
}

/// Horizontal concatenation [a | b].
template <typename T>
Matrix<T> hconcat(const Matrix<T>& a, const Matrix<T>& b) {
  if (a.rows() != b.rows()) throw Error(ErrorCode::DimensionMismatch, "hconcat");
  Matrix<T> c(a.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = a(i, j);
    for (std::size_t j = 0; j < b.cols(); ++j) c(i, a.cols() + j) = b(i, j);
  }
  return c;
}

RatMatrix to_rational(const IntMatrix& m);
RatVector to_rational(const IntVector& v);
/// Throws InvalidInput if some entry is not an integer.
IntMatrix to_integer(const RatMatrix& m);

Rat dot(const RatVector& a, const RatVector& b);
Int dot(const IntVector& a, const IntVector& b);
/// aᵗ Q b.
Rat form(const RatVector& a, const RatMatrix& q, const RatVector& b);

/// Reduced row echelon form; pivot columns are returned in increasing order.
RatMatrix rref(RatMatrix m, std::vector<std::size_t>* pivots = nullptr);
std::size_t rank(const RatMatrix& m);
std::size_t rank(const IntMatrix& m);
Rat determinant(const RatMatrix& m);
/// Fraction-free Bareiss elimination.
Int determinant(const IntMatrix& m);
std::optional<RatMatrix> inverse(const RatMatrix& m);
/// Solves A X = B for square nonsingular A; throws DimensionMismatch otherwise.
RatMatrix solve(const RatMatrix& a, const RatMatrix& b);
/// Basis of the right null space as columns, one per free variable in
/// increasing order, with that free variable set to 1.
RatMatrix kernel_basis(const RatMatrix& m);

/// Gram–Schmidt over Q in the given order with respect to the form q
/// (identity when q is null). Zero vectors are dropped.
std::vector<RatVector> gram_schmidt(const std::vector<RatVector>& vectors,
                                    const RatMatrix* q = nullptr);

Int content(const IntVector& v);
/// Clears denominators and divides by the content; zero stays zero.
IntVector primitive_integer_vector(const RatVector& v);
Int lcm_of_denominators(const RatVector& v);

bool is_symmetric(const RatMatrix& m);
/// All leading principal minors positive.
bool is_positive_definite(const RatMatrix& m);

std::string to_string(const Rat& r);
std::string to_string(const Int& n);
/// Accepts "p", "-p", "p/q".
Rat parse_rational(const std::string& s);
Int parse_integer(const std::string& s);

}  // namespace crystnet
