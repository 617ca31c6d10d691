#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "rational.hpp"

namespace cardyfrob {

/// Dense row-major matrix over an exact scalar type (Integer or Rational).
template <typename T>
class Matrix {
public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, T(0)) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
  }

  T trace() const {
    T acc(0);
    for (std::size_t i = 0; i < rows_ && i < cols_; ++i) acc += (*this)(i, i);
    return acc;
  }

  Matrix& operator+=(const Matrix& o) {
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
    return *this;
  }

  Matrix& operator*=(const T& s) {
    for (auto& v : data_) v *= s;
    return *this;
  }

  /// Adds s * o in place; skips the work when s is zero.
  Matrix& add_scaled(const T& s, const Matrix& o) {
    if (is_zero(s)) return *this;
    for (std::size_t i = 0; i < data_.size(); ++i)
      if (!is_zero(o.data_[i])) data_[i] += s * o.data_[i];
    return *this;
  }

  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }

  // Zero entries of the left factor are skipped; the 0/1 orbit matrices are very sparse.
  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    Matrix out(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const T& aik = a(i, k);
        if (is_zero(aik)) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) {
          const T& bkj = b(k, j);
          if (!is_zero(bkj)) out(i, j) += aik * bkj;
        }
      }
    return out;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  bool is_zero_matrix() const {
    for (const auto& v : data_)
      if (!is_zero(v)) return false;
    return true;
  }

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

template <typename To, typename From>
Matrix<To> matrix_cast(const Matrix<From>& m) {
  Matrix<To> out(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out(r, c) = To(m(r, c));
  return out;
}

namespace detail {

inline Integer exact_div(const Integer& num, const Integer& den) {
  Integer q, r;
  boost::multiprecision::divide_qr(num, den, q, r);
  if (!r.is_zero()) throw LogicError("fraction-free elimination produced an inexact division");
  return q;
}

// Clears denominators row by row; returns the integer matrix and the row scale factors.
inline std::pair<Matrix<Integer>, std::vector<Integer>> clear_denominators(const Matrix<Rational>& m) {
  Matrix<Integer> out(m.rows(), m.cols());
  std::vector<Integer> scale(m.rows(), Integer(1));
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Integer l = 1;
    for (std::size_t c = 0; c < m.cols(); ++c) l = boost::multiprecision::lcm(l, Integer(boost::multiprecision::denominator(m(r, c))));
    scale[r] = l;
    for (std::size_t c = 0; c < m.cols(); ++c) {
      const Rational scaled = m(r, c) * Rational(l);
      out(r, c) = boost::multiprecision::numerator(scaled);
    }
  }
  return {std::move(out), std::move(scale)};
}

} // namespace detail

/// Rank by fraction-free (Bareiss) elimination; pivots are taken in row order.
inline std::size_t rank(const Matrix<Rational>& m) {
  auto [a, scale] = detail::clear_denominators(m);
  const std::size_t rows = a.rows();
  const std::size_t cols = a.cols();
  Integer prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a(p, c).is_zero()) ++p;
    if (p == rows) continue;
    if (p != r)
      for (std::size_t j = 0; j < cols; ++j) std::swap(a(p, j), a(r, j));
    const Integer pivot = a(r, c);
    for (std::size_t i = r + 1; i < rows; ++i) {
      const Integer f = a(i, c);
      for (std::size_t j = c + 1; j < cols; ++j) {
        Integer v = pivot * a(i, j);
        if (!f.is_zero()) v -= f * a(r, j);
        a(i, j) = detail::exact_div(v, prev);
      }
      a(i, c) = 0;
    }
    prev = pivot;
    ++r;
  }
  return r;
}

/// Exact inverse by fraction-free Gauss-Jordan elimination, or nullopt when singular.
inline std::optional<Matrix<Rational>> inverse(const Matrix<Rational>& m) {
  if (m.rows() != m.cols()) throw LogicError("inverse of a non-square matrix");
  const std::size_t n = m.rows();
  auto [left, scale] = detail::clear_denominators(m);
  Matrix<Integer> a(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a(i, j) = left(i, j);
    a(i, n + i) = 1;
  }
  Integer prev = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && a(p, k).is_zero()) ++p;
    if (p == n) return std::nullopt;
    if (p != k)
      for (std::size_t j = 0; j < 2 * n; ++j) std::swap(a(p, j), a(k, j));
    const Integer pivot = a(k, k);
    for (std::size_t i = 0; i < n; ++i) {
      if (i == k) continue;
      const Integer f = a(i, k);
      for (std::size_t j = 0; j < 2 * n; ++j) {
        if (j == k) continue;
        Integer v = pivot * a(i, j);
        if (!f.is_zero()) v -= f * a(k, j);
        a(i, j) = detail::exact_div(v, prev);
      }
      a(i, k) = 0;
    }
    prev = pivot;
  }
  // Left block is now diagonal; row i of the inverse is the right block row over its pivot.
  Matrix<Rational> inv(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    const Integer d = a(i, i);
    for (std::size_t j = 0; j < n; ++j) {
      inv(i, j) = make_rational(a(i, n + j) * scale[j], d);
    }
  }
  return inv;
}

} // namespace cardyfrob
