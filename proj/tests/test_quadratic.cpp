#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "hermcheck/linear_feasibility.hpp"
#include "hermcheck/quadratic.hpp"

using namespace hermcheck;

namespace {

// Action of a permutation of x_1..x_N on the coordinates c_i = x_i (i < N),
// x_N = -sum c: returns A with c' = A c.
Matrix<Rational> permutation_action(const std::vector<unsigned>& sigma) {
  std::size_t n = sigma.size(), r = n - 1;
  Matrix<Rational> a(r, std::vector<Rational>(r, Rational(0)));
  for (std::size_t i = 0; i < r; ++i) {
    unsigned src = sigma[i];
    if (src < r) {
      a[i][src] = 1;
    } else {
      for (std::size_t j = 0; j < r; ++j) a[i][j] = -1;
    }
  }
  return a;
}

// Dimension of {Q symmetric : A^T Q A = Q for the generators of S_N}.
std::size_t invariant_dimension(unsigned n) {
  std::size_t r = n - 1;
  std::vector<std::pair<std::size_t, std::size_t>> slots;
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = i; j < r; ++j) slots.emplace_back(i, j);
  std::vector<unsigned> swap01(n), cycle(n);
  std::iota(swap01.begin(), swap01.end(), 0U);
  std::swap(swap01[0], swap01[1]);
  for (unsigned i = 0; i < n; ++i) cycle[i] = (i + 1) % n;
  Matrix<Rational> constraints;
  for (const auto& sigma : {swap01, cycle}) {
    Matrix<Rational> a = permutation_action(sigma);
    // each entry (p, q) of A^T Q A - Q is linear in the slots
    for (std::size_t p = 0; p < r; ++p)
      for (std::size_t q = p; q < r; ++q) {
        std::vector<Rational> row(slots.size(), Rational(0));
        for (std::size_t s = 0; s < slots.size(); ++s) {
          auto [i, j] = slots[s];
          Rational v = a[i][p] * a[j][q];
          if (i != j) v += a[j][p] * a[i][q];
          if ((i == p && j == q) || (i == q && j == p)) v -= 1;
          row[s] = v;
        }
        constraints.push_back(row);
      }
  }
  return slots.size() - rank(constraints);
}

}  // namespace

TEST_CASE("invariant quadratics match the nullspace oracle") {
  for (unsigned n = 2; n <= 6; ++n) {
    auto basis = invariant_quadratics(n);
    CHECK(basis.size() == invariant_dimension(n));
    for (const auto& q : basis) {
      std::vector<unsigned> sigma(n);
      std::iota(sigma.begin(), sigma.end(), 0U);
      do {
        Matrix<Rational> a = permutation_action(sigma);
        CHECK(multiply(transpose(a), multiply(q, a)) == q);
      } while (n <= 4 && std::next_permutation(sigma.begin(), sigma.end()));
    }
  }
  auto five = invariant_quadratics(5);
  REQUIRE(five.size() == 1);
  // proportional to sum x_i^2 = c^T (I + J) c
  Matrix<Rational> s(4, std::vector<Rational>(4, Rational(1)));
  for (std::size_t i = 0; i < 4; ++i) s[i][i] = 2;
  Rational ratio = five[0][0][0] / s[0][0];
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) CHECK(five[0][i][j] == ratio * s[i][j]);
  CHECK_THROWS_AS(invariant_quadratics(1), InputError);
  CHECK_THROWS_AS(invariant_quadratics(9), InputError);
}

TEST_CASE("quadratic rank") {
  Matrix<Rational> xy = quadratic_from_monomials(2, {{0, 1, Rational(1)}});
  CHECK(xy[0][1] == Rational(1, 2));
  CHECK(quadratic_rank(xy) == 2);
  std::vector<std::tuple<std::size_t, std::size_t, Rational>> terms;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = i; j < 4; ++j) terms.emplace_back(i, j, Rational(1));
  CHECK(quadratic_rank(quadratic_from_monomials(4, terms)) == 4);
  // (x + y + z)^2 has rank 1
  std::vector<std::tuple<std::size_t, std::size_t, Rational>> square;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = i; j < 3; ++j) square.emplace_back(i, j, Rational(i == j ? 1 : 2));
  CHECK(quadratic_rank(quadratic_from_monomials(3, square)) == 1);
  CHECK(quadratic_rank(Matrix<Rational>(3, std::vector<Rational>(3, Rational(0)))) == 0);
  // x1 x2 + x3 x4 needs the off-diagonal pivot step twice
  CHECK(quadratic_rank(quadratic_from_monomials(4, {{0, 1, Rational(1)}, {2, 3, Rational(1)}})) == 4);
  CHECK_THROWS_AS(quadratic_rank({{Rational(1), Rational(2)}, {Rational(0), Rational(1)}}), InputError);
  CHECK_THROWS_AS(quadratic_from_monomials(2, {{0, 2, Rational(1)}}), InputError);
}

TEST_CASE("quadratic rank agrees with matrix rank") {
  for (long a = -2; a <= 2; ++a)
    for (long b = -2; b <= 2; ++b) {
      Matrix<Rational> q = {{Rational(a), Rational(b), Rational(0)},
                            {Rational(b), Rational(0), Rational(a)},
                            {Rational(0), Rational(a), Rational(b)}};
      CHECK(quadratic_rank(q) == rank(q));
    }
}

TEST_CASE("nonnegative solutions") {
  // x + y = 1, x - y = 0
  Matrix<Rational> a = {{Rational(1), Rational(1)}, {Rational(1), Rational(-1)}};
  auto x = nonnegative_solution(a, {Rational(1), Rational(0)}, 2);
  REQUIRE(x);
  CHECK(*x == std::vector<Rational>{Rational(1, 2), Rational(1, 2)});
  // x + y = -1 has no nonnegative solution
  CHECK_FALSE(nonnegative_solution({{Rational(1), Rational(1)}}, {Rational(-1)}, 2));
  // x - y = -1: y = 1 + x
  auto y = nonnegative_solution({{Rational(1), Rational(-1)}}, {Rational(-1)}, 2);
  REQUIRE(y);
  CHECK((*y)[0] - (*y)[1] == -1);
  CHECK(sgn((*y)[0]) >= 0);
  // redundant rows
  auto z = nonnegative_solution({{Rational(1), Rational(2)}, {Rational(2), Rational(4)}},
                                {Rational(3), Rational(6)}, 2);
  CHECK(z.has_value());
  CHECK_THROWS_AS(nonnegative_solution(a, {Rational(1)}, 2), InputError);
}
