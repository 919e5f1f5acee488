#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "hermcheck/scalar.hpp"

namespace hermcheck {

/// Truncated commutative algebra on degree-2 generators g_a with g_a^(n_a+1) = 0.
/// The designated top monomial is prod g_a^(n_a). A degree-2 element
/// sum c_a g_a is strictly positive iff every c_a > 0 and weakly positive iff
/// every c_a >= 0 (octant semantics for invariant (1,1)-forms).
///
/// Up to 16 generators with n_a <= 15; exponents are packed 4 bits each.
class InvariantFormAlgebra {
 public:
  InvariantFormAlgebra(std::vector<std::string> names, std::vector<unsigned> orders);
  static InvariantFormAlgebra squarefree(std::vector<std::string> names);

  std::size_t size() const { return data_->names.size(); }
  const std::vector<std::string>& names() const { return data_->names; }
  const std::vector<unsigned>& orders() const { return data_->orders; }
  /// Number of degree-2 factors in the top monomial (half the real top degree).
  unsigned top_degree() const { return data_->top_degree; }
  std::optional<std::size_t> index_of(const std::string& name) const;

  friend bool operator==(const InvariantFormAlgebra& a, const InvariantFormAlgebra& b) {
    return a.data_ == b.data_ ||
           (a.data_->names == b.data_->names && a.data_->orders == b.data_->orders);
  }

 private:
  friend class Element;
  struct Data {
    std::vector<std::string> names;
    std::vector<unsigned> orders;
    unsigned top_degree = 0;
    std::uint64_t top_key = 0;
  };
  std::shared_ptr<const Data> data_;
};

/// Element of an InvariantFormAlgebra with rational coefficients.
class Element {
 public:
  using Key = std::uint64_t;  // 4-bit exponent per generator

  explicit Element(InvariantFormAlgebra alg) : alg_(std::move(alg)) {}
  static Element constant(const InvariantFormAlgebra& alg, const Rational& c);
  static Element generator(const InvariantFormAlgebra& alg, std::size_t index);
  /// sum c_a g_a
  static Element linear(const InvariantFormAlgebra& alg, const std::vector<Rational>& coeffs);

  const InvariantFormAlgebra& algebra() const { return alg_; }
  const std::map<Key, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// Homogeneous degree in generators, nullopt when zero or mixed.
  std::optional<unsigned> degree() const;
  /// Coefficients c_a of a degree-1 (real degree 2) element; throws otherwise.
  std::vector<Rational> linear_coefficients() const;
  /// Coefficient on the top monomial.
  Rational top() const;
  Rational coefficient(const std::vector<unsigned>& exponents) const;

  Element& add_term(Key k, const Rational& c);
  Element operator-() const;
  Element& operator+=(const Element& o);
  Element& operator-=(const Element& o);
  Element& operator*=(const Rational& c);
  friend Element operator+(Element a, const Element& b) { return a += b; }
  friend Element operator-(Element a, const Element& b) { return a -= b; }
  friend Element operator*(Element a, const Rational& c) { return a *= c; }
  friend Element operator*(const Rational& c, Element a) { return a *= c; }
  friend Element operator*(const Element& a, const Element& b);
  friend bool operator==(const Element& a, const Element& b) {
    return a.alg_ == b.alg_ && a.terms_ == b.terms_;
  }

  std::string to_string() const;

 private:
  void check_same_algebra(const Element& o) const;
  InvariantFormAlgebra alg_;
  std::map<Key, Rational> terms_;
};

Element power(const Element& u, unsigned k);

}  // namespace hermcheck
