#pragma once

#include <optional>
#include <vector>

#include "hermcheck/linalg.hpp"

namespace hermcheck {

/// Exact phase-one simplex (Bland's rule): some x >= 0 with a x = b, or
/// nullopt when the system is infeasible. `cols` is the number of unknowns.
std::optional<std::vector<Rational>> nonnegative_solution(const Matrix<Rational>& a,
                                                          const std::vector<Rational>& b,
                                                          std::size_t cols);

}  // namespace hermcheck
