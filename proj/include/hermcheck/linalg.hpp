#pragma once

// Small exact linear algebra over Rational or Scalar (dense, row-major).

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

#include "hermcheck/scalar.hpp"

namespace hermcheck {

template <class T>
using Matrix = std::vector<std::vector<T>>;

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }
inline bool is_zero(const Scalar& s) { return s.is_zero(); }

template <class T>
Matrix<T> identity_matrix(std::size_t n) {
  Matrix<T> m(n, std::vector<T>(n, T(0)));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = T(1);
  return m;
}

template <class T>
Matrix<T> multiply(const Matrix<T>& a, const Matrix<T>& b) {
  std::size_t n = a.size(), k = b.size(), m = b.empty() ? 0 : b[0].size();
  Matrix<T> out(n, std::vector<T>(m, T(0)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t l = 0; l < k; ++l) {
      if (is_zero(a[i][l])) continue;
      for (std::size_t j = 0; j < m; ++j) out[i][j] += a[i][l] * b[l][j];
    }
  return out;
}

template <class T>
Matrix<T> transpose(const Matrix<T>& a) {
  if (a.empty()) return {};
  Matrix<T> out(a[0].size(), std::vector<T>(a.size()));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a[i].size(); ++j) out[j][i] = a[i][j];
  return out;
}

/// In-place reduced row echelon form; returns pivot columns.
template <class T>
std::vector<std::size_t> row_reduce(Matrix<T>& a) {
  std::vector<std::size_t> pivots;
  if (a.empty()) return pivots;
  std::size_t rows = a.size(), cols = a[0].size(), r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && is_zero(a[p][c])) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[r]);
    T inv = T(1) / a[r][c];
    for (std::size_t j = c; j < cols; ++j) a[r][j] *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || is_zero(a[i][c])) continue;
      T f = a[i][c];
      for (std::size_t j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

template <class T>
std::size_t rank(Matrix<T> a) {
  return row_reduce(a).size();
}

/// Exact inverse; nullopt when singular.
template <class T>
std::optional<Matrix<T>> inverse(const Matrix<T>& a) {
  std::size_t n = a.size();
  Matrix<T> aug(n, std::vector<T>(2 * n, T(0)));
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i].size() != n) throw std::invalid_argument("inverse: matrix not square");
    for (std::size_t j = 0; j < n; ++j) aug[i][j] = a[i][j];
    aug[i][n + i] = T(1);
  }
  auto pivots = row_reduce(aug);
  if (pivots.size() < n || pivots[n - 1] != n - 1) return std::nullopt;
  Matrix<T> out(n, std::vector<T>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out[i][j] = aug[i][n + j];
  return out;
}

/// Basis of {x : a x = 0}.
template <class T>
Matrix<T> nullspace(Matrix<T> a, std::size_t cols) {
  auto pivots = row_reduce(a);
  std::vector<bool> is_pivot(cols, false);
  for (std::size_t c : pivots) is_pivot[c] = true;
  Matrix<T> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<T> v(cols, T(0));
    v[free] = T(1);
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -a[r][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

/// Some solution of a x = b, or nullopt when inconsistent.
template <class T>
std::optional<std::vector<T>> solve(const Matrix<T>& a, const std::vector<T>& b, std::size_t cols) {
  Matrix<T> aug = a;
  for (std::size_t i = 0; i < aug.size(); ++i) aug[i].push_back(b[i]);
  auto pivots = row_reduce(aug);
  if (!pivots.empty() && pivots.back() == cols) return std::nullopt;
  std::vector<T> x(cols, T(0));
  for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug[r][cols];
  return x;
}

}  // namespace hermcheck
