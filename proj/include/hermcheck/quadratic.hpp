#pragma once

#include <vector>

#include "hermcheck/linalg.hpp"

namespace hermcheck {

/// Basis of the S_N-invariant quadratic forms on the traceless diagonal
/// weight space, in coordinates c_1..c_(N-1) with x_N = -(c_1 + ... + c_(N-1)).
/// Each basis element is a symmetric Gram matrix Q (form = c^T Q c), obtained
/// by averaging the quadratic monomials over all N! permutations. N <= 8.
std::vector<Matrix<Rational>> invariant_quadratics(unsigned n);

/// Rank of a symmetric rational matrix by congruence diagonalization.
/// Throws InputError for a non-square or non-symmetric input.
std::size_t quadratic_rank(Matrix<Rational> q);

/// Symmetric Gram matrix of sum c x_i x_j over (i, j, c) triples (0-based).
Matrix<Rational> quadratic_from_monomials(
    std::size_t vars, const std::vector<std::tuple<std::size_t, std::size_t, Rational>>& terms);

}  // namespace hermcheck
