#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace cutpaste {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Dense row-major matrix over an exact ring.
template <typename T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  Matrix(std::size_t rows, std::size_t cols, std::vector<T> entries);

  static Matrix identity(std::size_t n);
  static Matrix from_rows(const std::vector<std::vector<T>>& rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool empty() const noexcept { return rows_ == 0 || cols_ == 0; }

  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<T> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const T> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
  std::vector<T> column(std::size_t c) const;

  Matrix transpose() const;

  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);
  // row[dst] += factor * row[src]
  void add_row_multiple(std::size_t dst, std::size_t src, const T& factor);
  void add_col_multiple(std::size_t dst, std::size_t src, const T& factor);
  void negate_row(std::size_t r);

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

template <typename T>
Matrix<T> operator*(const Matrix<T>& a, const Matrix<T>& b);

using IntMatrix = Matrix<Integer>;
using RatMatrix = Matrix<Rational>;

struct SNFResult {
  std::vector<Integer> diag;  // nonzero invariant factors d1 | d2 | ... | dr, all positive
  IntMatrix left;             // U, rows x rows, unimodular
  IntMatrix right;            // V, cols x cols, unimodular

  std::size_t rank() const noexcept { return diag.size(); }
  // D with the invariant factors on the diagonal, shaped like the input.
  IntMatrix diagonal_matrix(std::size_t rows, std::size_t cols) const;
};

// U * A * V = D. Pivot: smallest nonzero absolute value in the active block,
// ties broken by lowest (row, col).
SNFResult smith_normal_form(const IntMatrix& a);

// Fraction-free elimination; independent of the SNF path.
std::size_t rational_rank(const IntMatrix& a);
std::size_t rank_mod2(const IntMatrix& a);

Integer determinant(const IntMatrix& a);

struct SignatureTriple {
  std::size_t n_plus = 0;
  std::size_t n_minus = 0;
  std::size_t n_zero = 0;

  long signature() const { return static_cast<long>(n_plus) - static_cast<long>(n_minus); }
  friend bool operator==(const SignatureTriple&, const SignatureTriple&) = default;
};

// Congruence diagonalisation over Q. Throws NonSymmetric.
SignatureTriple symmetric_signature(const RatMatrix& q);

RatMatrix to_rational(const IntMatrix& a);

std::string to_string(const IntMatrix& a);

// ---- template definitions ----

template <typename T>
Matrix<T>::Matrix(std::size_t rows, std::size_t cols, std::vector<T> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
  if (data_.size() != rows_ * cols_) data_.resize(rows_ * cols_);
}

template <typename T>
Matrix<T> Matrix<T>::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
  return m;
}

template <typename T>
Matrix<T> Matrix<T>::from_rows(const std::vector<std::vector<T>>& rows) {
  const std::size_t r = rows.size();
  const std::size_t c = r == 0 ? 0 : rows.front().size();
  Matrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c && j < rows[i].size(); ++j) m(i, j) = rows[i][j];
  return m;
}

template <typename T>
std::vector<T> Matrix<T>::column(std::size_t c) const {
  std::vector<T> out(rows_);
  for (std::size_t i = 0; i < rows_; ++i) out[i] = (*this)(i, c);
  return out;
}

template <typename T>
Matrix<T> Matrix<T>::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

template <typename T>
void Matrix<T>::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
}

template <typename T>
void Matrix<T>::swap_cols(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
}

template <typename T>
void Matrix<T>::add_row_multiple(std::size_t dst, std::size_t src, const T& factor) {
  if (factor == 0) return;
  for (std::size_t j = 0; j < cols_; ++j) {
    const T& s = (*this)(src, j);
    if (s != 0) (*this)(dst, j) += factor * s;
  }
}

template <typename T>
void Matrix<T>::add_col_multiple(std::size_t dst, std::size_t src, const T& factor) {
  if (factor == 0) return;
  for (std::size_t i = 0; i < rows_; ++i) {
    const T& s = (*this)(i, src);
    if (s != 0) (*this)(i, dst) += factor * s;
  }
}

template <typename T>
void Matrix<T>::negate_row(std::size_t r) {
  for (std::size_t j = 0; j < cols_; ++j) (*this)(r, j) = -(*this)(r, j);
}

template <typename T>
Matrix<T> operator*(const Matrix<T>& a, const Matrix<T>& b) {
  Matrix<T> out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const T& aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += aik * b(k, j);
    }
  return out;
}

}  // namespace cutpaste
