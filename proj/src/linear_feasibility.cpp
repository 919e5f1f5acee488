#include "hermcheck/linear_feasibility.hpp"

namespace hermcheck {

std::optional<std::vector<Rational>> nonnegative_solution(const Matrix<Rational>& a,
                                                          const std::vector<Rational>& b,
                                                          std::size_t cols) {
  std::size_t rows = a.size();
  if (b.size() != rows) throw InputError("nonnegative_solution: row count mismatch");
  for (const auto& row : a)
    if (row.size() != cols) throw InputError("nonnegative_solution: ragged matrix");

  // Tableau columns: unknowns, one artificial per row, right-hand side.
  std::size_t width = cols + rows + 1, rhs = cols + rows;
  Matrix<Rational> t(rows, std::vector<Rational>(width, Rational(0)));
  std::vector<std::size_t> basis(rows);
  for (std::size_t i = 0; i < rows; ++i) {
    bool flip = sgn(b[i]) < 0;
    for (std::size_t j = 0; j < cols; ++j) t[i][j] = flip ? Rational(-a[i][j]) : a[i][j];
    t[i][rhs] = flip ? Rational(-b[i]) : b[i];
    t[i][cols + i] = 1;
    basis[i] = cols + i;
  }
  // Reduced costs of "minimize the sum of artificials".
  std::vector<Rational> z(width, Rational(0));
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) z[j] -= t[i][j];
    z[rhs] -= t[i][rhs];
  }

  while (true) {
    std::size_t enter = width;
    for (std::size_t j = 0; j < rhs; ++j)
      if (sgn(z[j]) < 0) {
        enter = j;
        break;
      }
    if (enter == width) break;
    std::size_t leave = rows;
    Rational best;
    for (std::size_t i = 0; i < rows; ++i) {
      if (sgn(t[i][enter]) <= 0) continue;
      Rational ratio = t[i][rhs] / t[i][enter];
      if (leave == rows || ratio < best || (ratio == best && basis[i] < basis[leave])) {
        leave = i;
        best = ratio;
      }
    }
    if (leave == rows) throw std::logic_error("phase-one simplex is unbounded");
    Rational inv = 1 / t[leave][enter];
    for (auto& x : t[leave]) x *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == leave || sgn(t[i][enter]) == 0) continue;
      Rational f = t[i][enter];
      for (std::size_t j = 0; j < width; ++j) t[i][j] -= f * t[leave][j];
    }
    if (sgn(z[enter]) != 0) {
      Rational f = z[enter];
      for (std::size_t j = 0; j < width; ++j) z[j] -= f * t[leave][j];
    }
    basis[leave] = enter;
  }

  if (sgn(z[rhs]) != 0) return std::nullopt;
  std::vector<Rational> x(cols, Rational(0));
  for (std::size_t i = 0; i < rows; ++i)
    if (basis[i] < cols) x[basis[i]] = t[i][rhs];
  return x;
}

}  // namespace hermcheck
