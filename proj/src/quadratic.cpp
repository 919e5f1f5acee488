#include "hermcheck/quadratic.hpp"

#include <algorithm>
#include <numeric>
#include <tuple>

namespace hermcheck {

std::vector<Matrix<Rational>> invariant_quadratics(unsigned n) {
  if (n < 2 || n > 8) throw InputError("invariant_quadratics supports 2 <= N <= 8");
  std::size_t r = n - 1;
  // x_i as a linear form in c
  std::vector<std::vector<Rational>> x(n, std::vector<Rational>(r, Rational(0)));
  for (std::size_t i = 0; i < r; ++i) {
    x[i][i] = 1;
    x[r][i] = -1;
  }
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::vector<Rational>> flat;  // upper triangles of the averages
  for (std::size_t a = 0; a < r; ++a)
    for (std::size_t b = a; b < r; ++b) {
      Matrix<Rational> sum(r, std::vector<Rational>(r, Rational(0)));
      std::size_t count = 0;
      do {
        const auto& u = x[perm[a]];
        const auto& v = x[perm[b]];
        for (std::size_t i = 0; i < r; ++i)
          for (std::size_t j = 0; j < r; ++j) sum[i][j] += (u[i] * v[j] + u[j] * v[i]) / 2;
        ++count;
      } while (std::next_permutation(perm.begin(), perm.end()));
      std::vector<Rational> row;
      for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = i; j < r; ++j) row.push_back(sum[i][j] / count);
      flat.push_back(std::move(row));
    }
  auto pivots = row_reduce(flat);
  std::vector<Matrix<Rational>> basis;
  for (std::size_t k = 0; k < pivots.size(); ++k) {
    Matrix<Rational> q(r, std::vector<Rational>(r, Rational(0)));
    std::size_t pos = 0;
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = i; j < r; ++j, ++pos) q[i][j] = q[j][i] = flat[k][pos];
    basis.push_back(std::move(q));
  }
  return basis;
}

std::size_t quadratic_rank(Matrix<Rational> q) {
  std::size_t n = q.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (q[i].size() != n) throw InputError("quadratic_rank: matrix is not square");
    for (std::size_t j = 0; j < i; ++j)
      if (q[i][j] != q[j][i]) throw InputError("quadratic_rank: matrix is not symmetric");
  }
  std::size_t rank = 0;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && sgn(q[p][p]) == 0) ++p;
    if (p == n) {
      // all remaining diagonal entries vanish; use an off-diagonal entry
      std::size_t i = n, j = n;
      for (std::size_t a = k; a < n && i == n; ++a)
        for (std::size_t b = a + 1; b < n; ++b)
          if (sgn(q[a][b]) != 0) {
            i = a;
            j = b;
            break;
          }
      if (i == n) break;
      // row/column i += row/column j gives diagonal 2 q_ij
      for (std::size_t c = 0; c < n; ++c) q[i][c] += q[j][c];
      for (std::size_t c = 0; c < n; ++c) q[c][i] += q[c][j];
      p = i;
    }
    std::swap(q[p], q[k]);
    for (auto& row : q) std::swap(row[p], row[k]);
    for (std::size_t i = k + 1; i < n; ++i) {
      if (sgn(q[i][k]) == 0) continue;
      Rational f = q[i][k] / q[k][k];
      for (std::size_t c = k; c < n; ++c) q[i][c] -= f * q[k][c];
      for (std::size_t c = k; c < n; ++c) q[c][i] = q[i][c];
    }
    ++rank;
  }
  return rank;
}

Matrix<Rational> quadratic_from_monomials(
    std::size_t vars, const std::vector<std::tuple<std::size_t, std::size_t, Rational>>& terms) {
  Matrix<Rational> q(vars, std::vector<Rational>(vars, Rational(0)));
  for (const auto& [i, j, c] : terms) {
    if (i >= vars || j >= vars) throw InputError("quadratic monomial index out of range");
    if (i == j) {
      q[i][i] += c;
    } else {
      q[i][j] += c / 2;
      q[j][i] += c / 2;
    }
  }
  return q;
}

}  // namespace hermcheck
