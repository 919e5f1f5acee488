#pragma once

#include <map>
#include <optional>
#include <string>

#include "hermcheck/complex_structure.hpp"

namespace hermcheck {

/// Invariant Hermitian candidate: a real J-invariant 2-form F on a complex
/// Lie algebra. Positivity is checked separately (is_positive).
class HermitianCandidate {
 public:
  /// Throws InputError unless F is a real 2-form of pure type (1,1).
  static HermitianCandidate make(ComplexLieAlgebra alg, Form fundamental);

  const ComplexLieAlgebra& algebra() const { return alg_; }
  const Form& fundamental_form() const { return f_; }
  std::size_t n() const { return alg_.complex_dim(); }

 private:
  HermitianCandidate(ComplexLieAlgebra alg, Form f) : alg_(std::move(alg)), f_(std::move(f)) {}
  ComplexLieAlgebra alg_;
  Form f_;
};

/// Gram matrix g(e_a, e_b) = F(e_a, I e_b) on the generator vectors.
Matrix<Scalar> metric_matrix(const Form& fundamental, const AlmostComplexStructure& j);

/// Sylvester test: all leading principal minors of g are > 0.
bool is_positive(const Form& fundamental, const AlmostComplexStructure& j);
bool is_positive(const HermitianCandidate& cand);

struct MetricReport {
  bool kahler = false;     // dF = 0
  bool balanced = false;   // dF^(n-1) = 0
  bool skt = false;        // dd^c F = 0
  std::optional<bool> astheno;  // dd^c F^(n-2) = 0; undefined for n < 3
  bool gauduchon = false;  // dd^c F^(n-1) = 0
  std::map<std::string, Form> witnesses;  // nonzero form per failed flag

  friend bool operator==(const MetricReport&, const MetricReport&) = default;
};

/// Throws InputError if F is not positive.
MetricReport classify(const HermitianCandidate& cand);

/// n * top(omega ^ F^(n-1)) / top(F^n). Throws InputError if F^n = 0.
Scalar trace(const Form& omega, const Form& fundamental, std::size_t n);
Scalar trace(const Form& omega, const HermitianCandidate& cand);

}  // namespace hermcheck
