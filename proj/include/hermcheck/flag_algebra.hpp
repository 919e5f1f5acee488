#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hermcheck/invariant_algebra.hpp"
#include "hermcheck/root_system.hpp"

namespace hermcheck {

/// Invariant-form model of the full flag SU(N)/T: one squarefree generator
/// alpha_jk per positive root r_jk of A_(N-1), in the root system's order.
class FlagA {
 public:
  explicit FlagA(unsigned n);

  unsigned n() const { return n_; }
  const InvariantFormAlgebra& algebra() const { return alg_; }
  const RootSystem& roots() const { return roots_; }
  /// Generator index of alpha_jk, 1 <= j < k <= N.
  std::size_t index(unsigned j, unsigned k) const;
  Element alpha(unsigned j, unsigned k) const;
  /// Sum of all generators.
  Element all_ones() const;

  /// omega_i = sum_{j<k} c_jk alpha_jk with
  /// c_jk = (d_i^j - d_i^k) - (d_(i+1)^j - d_(i+1)^k), i = 1..N-1.
  std::vector<Element> char_classes() const;
  /// sum_i c_i omega_i.
  Element omega_combo(const std::vector<Rational>& coeffs) const;

 private:
  unsigned n_;
  RootSystem roots_;
  InvariantFormAlgebra alg_;
};

struct PositivityProfile {
  enum class Kind { strict, weak, indefinite };
  Kind kind = Kind::indefinite;
  std::vector<std::size_t> zero_generators;  // weak only

  friend bool operator==(const PositivityProfile&, const PositivityProfile&) = default;
};

const char* to_string(PositivityProfile::Kind kind);

/// Octant semantics on a degree-2 element. The zero element is weak with
/// every generator listed.
PositivityProfile positivity_profile(const Element& elt);

/// Top coefficient of the product; throws unless the factors are
/// homogeneous with degrees summing to the top degree.
Rational top_intersection(std::span<const Element> factors);

/// m * top(omega F^(m-1)) / top(F^m), m the top degree. Throws unless F is
/// strictly positive.
Rational trace_in_algebra(const Element& omega, const Element& f);

/// lambda_a + lambda_b = lambda_(a+b) on every composable pair of positive
/// roots. Throws on a missing or non-positive value.
bool kahler_lambda_check(const RootSystem& roots, const std::vector<Rational>& lambda);
bool kahler_lambda_check(const RootSystem& roots, const std::map<std::string, Rational>& lambda);

struct ConeDecision {
  enum class Kind { certificate, witness };
  Kind kind = Kind::certificate;
  std::vector<Rational> mu;       // certificate: mu > 0, <mu, class> = 0
  std::vector<Rational> t;        // witness: sum t_i class_i
  std::vector<Rational> combination;  // witness coefficients, >= 0 and nonzero
  std::optional<bool> witness_additive;  // annotation on FlagA witnesses

  /// lambda_a = 1 / mu_a: the metric the certificate yields.
  std::vector<Rational> metric_lambda() const;
};

/// Decides whether some strictly positive mu is orthogonal to every class
/// (coefficient pairing), else returns a weakly positive nonzero class in
/// the span. Exactly one alternative holds.
ConeDecision cone_feasibility(const InvariantFormAlgebra& alg, const std::vector<Element>& classes);
/// Same, with the witness annotated by root additivity of its coefficients.
ConeDecision cone_feasibility(const FlagA& flag, const std::vector<Element>& classes);

/// t^2 = -top(F2^2 Omega^p) / top(F1^2 Omega^p); throws when the two top
/// intersections are zero or share a sign.
Rational astheno_scaling(const Element& f1, const Element& f2, const Element& omega, unsigned p);

/// Squarefree algebra on the positive roots, generators named by root labels.
InvariantFormAlgebra root_algebra(const RootSystem& roots);
/// sum_{a<b} 2 <r_a, r_b> alpha_a alpha_b in root_algebra(roots).
Element root_pairing_form(const RootSystem& roots);

}  // namespace hermcheck
