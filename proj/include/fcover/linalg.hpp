#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "fcover/errors.hpp"
#include "fcover/rational.hpp"

namespace fcover {

using Vector = std::vector<Rational>;

// Dense row-major matrix over Q.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  // Columns given as vectors of equal length.
  static Matrix from_columns(std::span<const Vector> cols, std::size_t rows) {
    Matrix m(rows, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
      if (cols[j].size() != rows) throw DimensionMismatch("column length mismatch");
      for (std::size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
    }
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  Matrix operator*(const Matrix& o) const {
    if (cols_ != o.rows_) throw DimensionMismatch("matrix product shape mismatch");
    Matrix r(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t k = 0; k < cols_; ++k) {
        if ((*this)(i, k) == 0) continue;
        for (std::size_t j = 0; j < o.cols_; ++j) r(i, j) += (*this)(i, k) * o(k, j);
      }
    return r;
  }

  Vector operator*(const Vector& v) const {
    if (v.size() != cols_) throw DimensionMismatch("matrix-vector shape mismatch");
    Vector r(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) r[i] += (*this)(i, j) * v[j];
    return r;
  }

  Matrix operator-(const Matrix& o) const {
    Matrix r(*this);
    for (std::size_t k = 0; k < data_.size(); ++k) r.data_[k] -= o.data_[k];
    return r;
  }

  bool is_zero() const {
    for (const auto& x : data_)
      if (x != 0) return false;
    return true;
  }

  bool operator==(const Matrix&) const = default;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Rational> data_;
};

struct RowEchelon {
  Matrix reduced;
  std::vector<std::size_t> pivots;  // pivot column per row
};

inline RowEchelon rref(Matrix m) {
  RowEchelon out;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t p = row;
    while (p < m.rows() && m(p, col) == 0) ++p;
    if (p == m.rows()) continue;
    if (p != row)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(row, j));
    Rational inv = 1 / m(row, col);
    for (std::size_t j = col; j < m.cols(); ++j) m(row, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == row || m(i, col) == 0) continue;
      Rational f = m(i, col);
      for (std::size_t j = col; j < m.cols(); ++j) m(i, j) -= f * m(row, j);
    }
    out.pivots.push_back(col);
    ++row;
  }
  out.reduced = std::move(m);
  return out;
}

inline std::size_t rank(const Matrix& m) { return rref(m).pivots.size(); }

inline std::size_t span_dimension(std::span<const Vector> vectors, std::size_t dim) {
  if (vectors.empty()) return 0;
  return rank(Matrix::from_columns(vectors, dim));
}

// Basis of {v : m v = 0}.
inline std::vector<Vector> nullspace(const Matrix& m) {
  auto e = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<Vector> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vector v(m.cols());
    v[free] = 1;
    for (std::size_t r = 0; r < e.pivots.size(); ++r) v[e.pivots[r]] = -e.reduced(r, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

// Bareiss fraction-free elimination; every division is exact.
inline Rational determinant(Matrix m) {
  if (m.rows() != m.cols()) throw DimensionMismatch("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  Rational sign = 1, prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && m(p, k) == 0) ++p;
      if (p == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(m(p, j), m(k, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

// Some solution of m x = b, or nullopt when inconsistent.
inline std::optional<Vector> solve(const Matrix& m, const Vector& b) {
  if (b.size() != m.rows()) throw DimensionMismatch("right-hand side length mismatch");
  Matrix aug(m.rows(), m.cols() + 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
    aug(i, m.cols()) = b[i];
  }
  auto e = rref(std::move(aug));
  if (!e.pivots.empty() && e.pivots.back() == m.cols()) return std::nullopt;
  Vector x(m.cols());
  for (std::size_t r = 0; r < e.pivots.size(); ++r) x[e.pivots[r]] = e.reduced(r, m.cols());
  return x;
}

inline bool is_zero(const Vector& v) {
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

inline Vector axpy(const Rational& a, const Vector& x, Vector y) {
  for (std::size_t i = 0; i < y.size(); ++i) y[i] += a * x[i];
  return y;
}

}  // namespace fcover
