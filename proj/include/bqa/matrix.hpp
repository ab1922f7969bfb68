#pragma once

#include <cassert>
#include <cstddef>
#include <optional>
#include <ostream>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "bqa/rational.hpp"

namespace bqa {

/// Dense row-major matrix over an exact field.
///
/// The library uses the row-vector convention throughout: a linear map
/// V -> W with dim V = m and dim W = n is an m x n matrix acting as v |-> v * A.
/// With this convention composition "first A, then B" is the product A * B,
/// which matches left-to-right path composition for right modules.
template <class F>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = F{1};
    return m;
  }

  [[nodiscard]] std::size_t rows() const { return rows_; }
  [[nodiscard]] std::size_t cols() const { return cols_; }
  [[nodiscard]] bool empty() const { return rows_ == 0 || cols_ == 0; }

  F& operator()(std::size_t i, std::size_t j) {
    assert(i < rows_ && j < cols_);
    return data_[i * cols_ + j];
  }
  const F& operator()(std::size_t i, std::size_t j) const {
    assert(i < rows_ && j < cols_);
    return data_[i * cols_ + j];
  }

  [[nodiscard]] std::span<F> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
  [[nodiscard]] std::span<const F> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }

  [[nodiscard]] bool is_zero() const {
    for (const auto& x : data_)
      if (!x.is_zero()) return false;
    return true;
  }

  [[nodiscard]] Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  /// Rows `idx` of this matrix, in the given order.
  [[nodiscard]] Matrix select_rows(std::span<const std::size_t> idx) const {
    Matrix m(idx.size(), cols_);
    for (std::size_t r = 0; r < idx.size(); ++r)
      for (std::size_t j = 0; j < cols_; ++j) m(r, j) = (*this)(idx[r], j);
    return m;
  }

  [[nodiscard]] Matrix select_cols(std::span<const std::size_t> idx) const {
    Matrix m(rows_, idx.size());
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t c = 0; c < idx.size(); ++c) m(i, c) = (*this)(i, idx[c]);
    return m;
  }

  void append_row(std::span<const F> r) {
    assert(rows_ == 0 || r.size() == cols_);
    if (rows_ == 0) cols_ = r.size();
    data_.insert(data_.end(), r.begin(), r.end());
    ++rows_;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    assert(a.cols_ == b.rows_);
    Matrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const F& x = a(i, k);
        if (x.is_zero()) continue;
        for (std::size_t j = 0; j < b.cols_; ++j)
          if (!b(k, j).is_zero()) c(i, j) += x * b(k, j);
      }
    return c;
  }

  friend Matrix operator+(Matrix a, const Matrix& b) {
    assert(a.rows_ == b.rows_ && a.cols_ == b.cols_);
    for (std::size_t i = 0; i < a.data_.size(); ++i) a.data_[i] += b.data_[i];
    return a;
  }

  friend Matrix operator-(Matrix a, const Matrix& b) {
    assert(a.rows_ == b.rows_ && a.cols_ == b.cols_);
    for (std::size_t i = 0; i < a.data_.size(); ++i) a.data_[i] -= b.data_[i];
    return a;
  }

  friend Matrix operator*(const F& s, Matrix a) {
    for (auto& x : a.data_) x *= s;
    return a;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  /// [a | b], both with the same row count.
  static Matrix hstack(const Matrix& a, const Matrix& b) {
    assert(a.rows_ == b.rows_);
    Matrix m(a.rows_, a.cols_ + b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
      for (std::size_t j = 0; j < a.cols_; ++j) m(i, j) = a(i, j);
      for (std::size_t j = 0; j < b.cols_; ++j) m(i, a.cols_ + j) = b(i, j);
    }
    return m;
  }

  /// [a ; b], both with the same column count. Either may have zero rows.
  static Matrix vstack(const Matrix& a, const Matrix& b) {
    if (a.rows_ == 0) return b.rows_ == 0 ? Matrix(0, std::max(a.cols_, b.cols_)) : b;
    if (b.rows_ == 0) return a;
    assert(a.cols_ == b.cols_);
    Matrix m = a;
    m.data_.insert(m.data_.end(), b.data_.begin(), b.data_.end());
    m.rows_ += b.rows_;
    return m;
  }

  /// Block-diagonal sum.
  static Matrix direct_sum(const Matrix& a, const Matrix& b) {
    Matrix m(a.rows_ + b.rows_, a.cols_ + b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t j = 0; j < a.cols_; ++j) m(i, j) = a(i, j);
    for (std::size_t i = 0; i < b.rows_; ++i)
      for (std::size_t j = 0; j < b.cols_; ++j) m(a.rows_ + i, a.cols_ + j) = b(i, j);
    return m;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<F> data_;
};

template <class F>
std::ostream& operator<<(std::ostream& os, const Matrix<F>& m) {
  os << '[';
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (i) os << "; ";
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) os << ' ';
      os << m(i, j);
    }
  }
  return os << ']';
}

/// Reduced row echelon form with its pivot columns.
template <class F>
struct Echelon {
  Matrix<F> reduced;  // only the nonzero rows, one per pivot
  std::vector<std::size_t> pivots;

  [[nodiscard]] std::size_t rank() const { return pivots.size(); }
};

template <class F>
Echelon<F> rref(Matrix<F> a) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t p = r;
    while (p < a.rows() && a(p, c).is_zero()) ++p;
    if (p == a.rows()) continue;
    if (p != r)
      for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(p, j), a(r, j));
    const F inv = a(r, c).inverse();
    if (!(inv == F{1}))
      for (std::size_t j = c; j < a.cols(); ++j) a(r, j) *= inv;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == r || a(i, c).is_zero()) continue;
      const F f = a(i, c);
      for (std::size_t j = c; j < a.cols(); ++j)
        if (!a(r, j).is_zero()) a(i, j) -= f * a(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  std::vector<std::size_t> keep(r);
  for (std::size_t i = 0; i < r; ++i) keep[i] = i;
  Matrix<F> reduced = a.select_rows(keep);
  if (r == 0) reduced = Matrix<F>(0, a.cols());
  return {std::move(reduced), std::move(pivots)};
}

template <class F>
std::size_t rank(const Matrix<F>& a) {
  return rref(a).rank();
}

/// Basis (as rows) of {x : A x^T = 0}, i.e. the right null space.
template <class F>
Matrix<F> null_space(const Matrix<F>& a) {
  const std::size_t n = a.cols();
  const Echelon<F> e = rref(a);
  std::vector<bool> is_pivot(n, false);
  for (auto p : e.pivots) is_pivot[p] = true;
  Matrix<F> basis(0, n);
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    std::vector<F> v(n);
    v[free] = F{1};
    for (std::size_t r = 0; r < e.pivots.size(); ++r) v[e.pivots[r]] = -e.reduced(r, free);
    basis.append_row(v);
  }
  if (basis.rows() == 0) basis = Matrix<F>(0, n);
  return basis;
}

/// Basis (as rows) of {y : y A = 0}.
template <class F>
Matrix<F> left_null_space(const Matrix<F>& a) {
  return null_space(a.transpose());
}

/// Reduces `x` modulo the row space of an echelon form; the result vanishes at
/// every pivot column.
template <class F>
std::vector<F> reduce_mod(const Echelon<F>& e, std::span<const F> x) {
  std::vector<F> v(x.begin(), x.end());
  for (std::size_t r = 0; r < e.pivots.size(); ++r) {
    const F f = v[e.pivots[r]];
    if (f.is_zero()) continue;
    for (std::size_t j = 0; j < v.size(); ++j)
      if (!e.reduced(r, j).is_zero()) v[j] -= f * e.reduced(r, j);
  }
  return v;
}

/// Coordinates of `x` in the basis formed by the rows of an echelon form, or
/// nullopt when `x` is not in the row space.
template <class F>
std::optional<std::vector<F>> echelon_coordinates(const Echelon<F>& e, std::span<const F> x) {
  std::vector<F> coords(e.pivots.size());
  for (std::size_t r = 0; r < e.pivots.size(); ++r) coords[r] = x[e.pivots[r]];
  const auto rest = reduce_mod(e, x);
  for (const auto& y : rest)
    if (!y.is_zero()) return std::nullopt;
  return coords;
}

/// Inverse of a square matrix; throws std::domain_error when singular.
template <class F>
Matrix<F> inverse(const Matrix<F>& a) {
  const std::size_t n = a.rows();
  if (a.cols() != n) throw std::domain_error("inverse of a non-square matrix");
  const Echelon<F> e = rref(Matrix<F>::hstack(a, Matrix<F>::identity(n)));
  if (e.rank() < n || (n > 0 && e.pivots[n - 1] != n - 1)) throw std::domain_error("singular matrix");
  Matrix<F> inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = e.reduced(i, n + j);
  return inv;
}

using QMatrix = Matrix<Rational>;

}  // namespace bqa
