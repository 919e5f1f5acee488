#pragma once

#include <map>
#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "hermcheck/form.hpp"
#include "hermcheck/lie.hpp"
#include "hermcheck/linalg.hpp"

namespace hermcheck {

/// Almost-complex structure acting on generator 1-forms:
///   J(e^a) = sum_b J[a][b] e^b,   J^2 = -Id.
///
/// Convention (used everywhere in the library): the (1,0)-forms are the image
/// of (Id - iJ)/2, i.e. the +i eigenspace of J, and the induced operator I on
/// forms is J extended as an algebra automorphism, which multiplies a
/// (p,q)-form by i^(p-q). For pairs (a, b) with J e^a = e^b the (1,0)-form is
/// e^a - i e^b, and on real (1,1)-forms d^c = I^-1 d I = i(delbar - del).
class AlmostComplexStructure {
 public:
  /// J e^a = e^b, J e^b = -e^a for each (a, b) (0-based); pairs must cover
  /// every generator exactly once.
  static AlmostComplexStructure from_pairs(
      std::size_t dim, const std::vector<std::pair<std::size_t, std::size_t>>& pairs);
  /// Pairs (0,1), (2,3), ...
  static AlmostComplexStructure standard(std::size_t dim);
  /// Validates reality and J^2 = -Id.
  static AlmostComplexStructure from_matrix(Matrix<Scalar> j);

  std::size_t dim() const { return data_->dim; }
  std::size_t complex_dim() const { return data_->dim / 2; }
  const Matrix<Scalar>& matrix() const { return data_->j; }

  /// I acting on forms (automorphism extension of J) and its inverse.
  Form apply(const Form& u) const;
  Form apply_inverse(const Form& u) const;

  /// Basis phi_1..phi_n of (1,0)-forms in the generator basis.
  const std::vector<Form>& holomorphic_coframe() const { return data_->phi; }
  /// Images of the generators in the coframe (phi_1..phi_n, conj phi_1..phi_n),
  /// as forms over 2n generators, and the inverse map.
  const std::vector<Form>& to_coframe() const { return data_->to_psi; }
  const std::vector<Form>& from_coframe() const { return data_->from_psi; }

  /// Action on tangent vectors, I e_b = -sum_a J[a][b] e_a (so that the pair
  /// (a, b) gives I e_a = e_b).
  Matrix<Scalar> vector_action() const;

 private:
  struct Data {
    std::size_t dim = 0;
    Matrix<Scalar> j;
    std::vector<Form> j_images, j_inverse_images, phi, to_psi, from_psi;
  };
  explicit AlmostComplexStructure(std::shared_ptr<const Data> d) : data_(std::move(d)) {}
  static std::shared_ptr<const Data> build(Matrix<Scalar> j);

  std::shared_ptr<const Data> data_;
};

/// Decomposition of a form into (p,q)-components, each expressed back in the
/// real generator basis.
struct BigradedForm {
  std::size_t dim = 0;
  std::map<std::pair<int, int>, Form> components;

  Form component(int p, int q) const;
  Form total() const;
  bool is_pure(int p, int q) const;
};

BigradedForm pq_decompose(const AlmostComplexStructure& j, const Form& u);

struct IntegrabilityReport {
  bool ok = true;
  std::optional<std::size_t> index;  // offending phi (0-based)
  Form coframe_element;
  Form obstruction;  // (0,2)-part of d(phi)
};

/// Integrable iff d(phi) has no (0,2)-part for every (1,0)-form phi.
IntegrabilityReport is_integrable(const LieAlgebra& alg, const AlmostComplexStructure& j);

/// A validated Lie algebra together with an integrable complex structure.
class ComplexLieAlgebra {
 public:
  /// Throws InputError if dimensions differ or J is not integrable.
  static ComplexLieAlgebra make(LieAlgebra alg, AlmostComplexStructure j);

  const LieAlgebra& algebra() const { return alg_; }
  const AlmostComplexStructure& complex_structure() const { return j_; }
  std::size_t dim() const { return alg_.dim(); }
  std::size_t complex_dim() const { return j_.complex_dim(); }

  Form d(const Form& u) const { return alg_.d(u); }
  /// d^c = I^-1 d I.
  Form dc(const Form& u) const;
  Form del(const Form& u) const;
  Form delbar(const Form& u) const;

 private:
  ComplexLieAlgebra(LieAlgebra alg, AlmostComplexStructure j)
      : alg_(std::move(alg)), j_(std::move(j)) {}
  LieAlgebra alg_;
  AlmostComplexStructure j_;
};

}  // namespace hermcheck
