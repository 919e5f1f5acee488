#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "hermcheck/form.hpp"

namespace hermcheck {

/// A Lie algebra given by the differentials of its dual basis: d1[k] = de^k,
/// with de^k(X, Y) = -e^k([X, Y]). Unvalidated; see LieAlgebra.
struct LieAlgebraSpec {
  std::size_t dim = 0;
  std::vector<Form> d1;

  static LieAlgebraSpec abelian(std::size_t dim);
  friend bool operator==(const LieAlgebraSpec&, const LieAlgebraSpec&) = default;
};

/// Chevalley-Eilenberg differential, extended from d1 as an anti-derivation.
Form ce_d(const LieAlgebraSpec& alg, const Form& u);

struct JacobiReport {
  bool ok = true;
  std::optional<std::size_t> generator;  // 0-based offender
  Form defect;                           // d(d e^generator), or a shape error
  std::string message;
};

/// Checks the shape of d1 (real 2-forms) and d^2 e^k = 0 for every k.
JacobiReport validate(const LieAlgebraSpec& alg);

/// A spec that passed validate(). Downstream modules only accept this type.
class LieAlgebra {
 public:
  /// Throws InputError carrying the report message when validation fails.
  static LieAlgebra from_spec(LieAlgebraSpec spec);
  static LieAlgebra abelian(std::size_t dim) {
    return from_spec(LieAlgebraSpec::abelian(dim));
  }

  const LieAlgebraSpec& spec() const { return *spec_; }
  std::size_t dim() const { return spec_->dim; }
  Form d(const Form& u) const { return ce_d(*spec_, u); }
  Monomial volume() const { return Monomial::volume(dim()); }

 private:
  explicit LieAlgebra(std::shared_ptr<const LieAlgebraSpec> spec) : spec_(std::move(spec)) {}
  std::shared_ptr<const LieAlgebraSpec> spec_;
};

}  // namespace hermcheck
