#pragma once

#include <bit>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <tuple>
#include <vector>

#include "hermcheck/scalar.hpp"

namespace hermcheck {

inline constexpr std::size_t kMaxGenerators = 64;

/// A wedge monomial e^{i1} ^ ... ^ e^{ik} with i1 < ... < ik, stored as a
/// bit set over 0-based generator indices.
class Monomial {
 public:
  constexpr Monomial() = default;
  constexpr explicit Monomial(std::uint64_t bits) : bits_(bits) {}
  static Monomial from_indices(std::span<const std::size_t> indices);
  static Monomial from_indices(std::initializer_list<std::size_t> indices);
  /// e^0 ^ ... ^ e^{dim-1}
  static Monomial volume(std::size_t dim);

  constexpr std::uint64_t bits() const { return bits_; }
  int degree() const { return std::popcount(bits_); }
  bool contains(std::size_t index) const { return (bits_ >> index) & 1U; }
  std::vector<std::size_t> indices() const;

  friend constexpr bool operator==(Monomial a, Monomial b) = default;
  /// Degree first, then lexicographic on the sorted index list.
  friend bool operator<(Monomial a, Monomial b);

 private:
  std::uint64_t bits_ = 0;
};

/// Sign (+1 / -1) of a ^ b for disjoint monomials, or 0 if they overlap.
int merge_sign(Monomial a, Monomial b);

struct MonomialOrder {
  bool operator()(Monomial a, Monomial b) const { return a < b; }
};

/// Element of the exterior algebra over `dim` generators with coefficients in
/// Scalar. Zero coefficients are never stored, so equality is term equality.
class Form {
 public:
  using Terms = std::map<Monomial, Scalar, MonomialOrder>;

  Form() = default;
  explicit Form(std::size_t dim);
  static Form constant(std::size_t dim, const Scalar& c);
  static Form generator(std::size_t dim, std::size_t index);
  static Form monomial(std::size_t dim, Monomial m, const Scalar& c = 1);
  /// Real 2-form sum over pairs (a, b) of c * e^a ^ e^b (0-based).
  static Form two_form(std::size_t dim,
                       std::initializer_list<std::tuple<std::size_t, std::size_t, long>> terms);

  std::size_t dim() const { return dim_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  Scalar coefficient(Monomial m) const;
  /// Homogeneous degree, or nullopt for zero / mixed-degree forms.
  std::optional<int> degree() const;
  Form homogeneous_part(int k) const;
  bool is_real() const;

  /// Adds c * m in place (used while building values).
  Form& add_term(Monomial m, const Scalar& c);

  Form operator-() const;
  Form& operator+=(const Form& o);
  Form& operator-=(const Form& o);
  Form& operator*=(const Scalar& c);
  friend Form operator+(Form a, const Form& b) { return a += b; }
  friend Form operator-(Form a, const Form& b) { return a -= b; }
  friend Form operator*(Form a, const Scalar& c) { return a *= c; }
  friend Form operator*(const Scalar& c, Form a) { return a *= c; }
  friend bool operator==(const Form& a, const Form& b) {
    return a.dim_ == b.dim_ && a.terms_ == b.terms_;
  }

  Form conj() const;
  /// Same form viewed over a larger generator list (identity embedding of
  /// indices; this is how base forms are pulled back to bundle total spaces).
  Form extended(std::size_t new_dim) const;

  /// Human-readable rendering using 1-based indices, e.g. "e12 - 2 e56".
  std::string to_string() const;

 private:
  void check_same_dim(const Form& o) const;

  std::size_t dim_ = 0;
  Terms terms_;
};

Form wedge(const Form& u, const Form& v);
Form power(const Form& u, unsigned k);
Scalar top_coefficient(const Form& u, Monomial vol);
/// Coefficient on e^0 ^ ... ^ e^{dim-1}.
Scalar top_coefficient(const Form& u);

/// Image of u under the algebra homomorphism sending generator a to the
/// 1-form images[a] (all images share one target dimension). Covers
/// changes of coframe and the action of an endomorphism on forms.
Form substitute(const Form& u, std::span<const Form> images);

}  // namespace hermcheck
