#pragma once

#include <string>
#include <vector>

#include "hermcheck/complex_structure.hpp"
#include "hermcheck/invariant_algebra.hpp"

namespace hermcheck {

/// Principal torus bundle over an invariant base model. Curvature l is the
/// differential of the new fiber coframe theta_l; J pairs theta_(2j-1) with
/// theta_(2j) (J theta_(2j-1) = theta_(2j)).
struct TorusBundleSpec {
  ComplexLieAlgebra base;
  std::vector<Form> curvatures;  // even count, base dimension
};

/// Extended algebra with dim_base + 2m generators, the fiber coframe last.
/// Throws InputError naming the curvature that is not closed or whose
/// complex combination has a (0,2)-part.
ComplexLieAlgebra total_space(const TorusBundleSpec& spec);

/// pullback(F_base) + sum_j theta_(2j-1) ^ theta_(2j). Throws unless F_base
/// is positive of type (1,1) on the base.
Form canonical_metric(const TorusBundleSpec& spec, const Form& f_base);

struct Prop31Report {
  bool holds = false;
  unsigned k = 0;
  Form lhs;         // dd^c Omega^k
  Form rhs;         // k (w1^2 + w2^2) ^ F^(k-1), pulled back
  Form difference;  // lhs - rhs
};

/// Checks dd^c Omega^k = k (w1^2 + w2^2) ^ F^(k-1) on the total space of a
/// T^2 bundle with Kahler base form. Requires exactly two curvatures and
/// 1 <= k <= n - 2 for total complex dimension n.
Prop31Report verify_prop31(const TorusBundleSpec& spec, const Form& f_base, unsigned k);

struct MatsuoResult {
  bool value = false;
  bool vacuous = false;  // the wedge exceeds the base top degree
  std::string warning;
};

/// Whether (w1^2 + w2^2) ^ F^(n_total - 3) vanishes on the base.
MatsuoResult matsuo_condition(const Form& w1, const Form& w2, const Form& f_base,
                              unsigned n_total);
MatsuoResult matsuo_condition(const Element& w1, const Element& w2, const Element& f_base,
                              unsigned n_total);

/// trace(w_l, F_base) for every curvature. Throws unless F_base is positive
/// and balanced on the base.
std::vector<Scalar> balanced_trace_criterion(const TorusBundleSpec& spec, const Form& f_base);

}  // namespace hermcheck
