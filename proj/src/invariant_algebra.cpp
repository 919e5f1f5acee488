#include "hermcheck/invariant_algebra.hpp"

#include <sstream>

namespace hermcheck {

namespace {

unsigned exponent(Element::Key k, std::size_t a) { return (k >> (4 * a)) & 0xF; }

}  // namespace

InvariantFormAlgebra::InvariantFormAlgebra(std::vector<std::string> names,
                                           std::vector<unsigned> orders) {
  if (names.size() != orders.size())
    throw InputError("invariant algebra: one nilpotency order per generator");
  if (names.empty() || names.size() > 16)
    throw InputError("invariant algebra supports 1 to 16 generators");
  auto data = std::make_shared<Data>();
  for (std::size_t a = 0; a < orders.size(); ++a) {
    if (orders[a] == 0 || orders[a] > 15)
      throw InputError("nilpotency order must be between 1 and 15");
    for (std::size_t b = 0; b < a; ++b)
      if (names[a] == names[b]) throw InputError("duplicate generator name " + names[a]);
    data->top_degree += orders[a];
    data->top_key |= static_cast<Element::Key>(orders[a]) << (4 * a);
  }
  data->names = std::move(names);
  data->orders = std::move(orders);
  data_ = std::move(data);
}

InvariantFormAlgebra InvariantFormAlgebra::squarefree(std::vector<std::string> names) {
  std::vector<unsigned> orders(names.size(), 1);
  return InvariantFormAlgebra(std::move(names), std::move(orders));
}

std::optional<std::size_t> InvariantFormAlgebra::index_of(const std::string& name) const {
  for (std::size_t a = 0; a < size(); ++a)
    if (data_->names[a] == name) return a;
  return std::nullopt;
}

Element Element::constant(const InvariantFormAlgebra& alg, const Rational& c) {
  Element e(alg);
  e.add_term(0, c);
  return e;
}

Element Element::generator(const InvariantFormAlgebra& alg, std::size_t index) {
  if (index >= alg.size()) throw InputError("generator index out of range");
  Element e(alg);
  e.add_term(Key{1} << (4 * index), 1);
  return e;
}

Element Element::linear(const InvariantFormAlgebra& alg, const std::vector<Rational>& coeffs) {
  if (coeffs.size() != alg.size())
    throw InputError("expected " + std::to_string(alg.size()) + " coefficients, got " +
                     std::to_string(coeffs.size()));
  Element e(alg);
  for (std::size_t a = 0; a < coeffs.size(); ++a) e.add_term(Key{1} << (4 * a), coeffs[a]);
  return e;
}

std::optional<unsigned> Element::degree() const {
  std::optional<unsigned> d;
  for (const auto& [k, c] : terms_) {
    unsigned total = 0;
    for (std::size_t a = 0; a < alg_.size(); ++a) total += exponent(k, a);
    if (d && *d != total) return std::nullopt;
    d = total;
  }
  return d;
}

std::vector<Rational> Element::linear_coefficients() const {
  if (!is_zero() && degree() != 1u)
    throw InputError("expected a degree-2 element (linear in the generators)");
  std::vector<Rational> out(alg_.size(), Rational(0));
  for (const auto& [k, c] : terms_)
    for (std::size_t a = 0; a < alg_.size(); ++a)
      if (exponent(k, a) == 1) out[a] = c;
  return out;
}

Rational Element::top() const {
  auto it = terms_.find(alg_.data_->top_key);
  return it == terms_.end() ? Rational(0) : it->second;
}

Rational Element::coefficient(const std::vector<unsigned>& exponents) const {
  if (exponents.size() != alg_.size()) throw InputError("exponent vector has wrong length");
  Key k = 0;
  for (std::size_t a = 0; a < exponents.size(); ++a) {
    if (exponents[a] > alg_.orders()[a]) return 0;
    k |= static_cast<Key>(exponents[a]) << (4 * a);
  }
  auto it = terms_.find(k);
  return it == terms_.end() ? Rational(0) : it->second;
}

Element& Element::add_term(Key k, const Rational& c) {
  if (sgn(c) == 0) return *this;
  auto [it, inserted] = terms_.try_emplace(k, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
  return *this;
}

void Element::check_same_algebra(const Element& o) const {
  if (!(alg_ == o.alg_)) throw InputError("elements belong to different algebras");
}

Element Element::operator-() const {
  Element out(*this);
  for (auto& [k, c] : out.terms_) c = -c;
  return out;
}

Element& Element::operator+=(const Element& o) {
  check_same_algebra(o);
  for (const auto& [k, c] : o.terms_) add_term(k, c);
  return *this;
}

Element& Element::operator-=(const Element& o) {
  check_same_algebra(o);
  for (const auto& [k, c] : o.terms_) add_term(k, -c);
  return *this;
}

Element& Element::operator*=(const Rational& c) {
  if (sgn(c) == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [k, coeff] : terms_) coeff *= c;
  return *this;
}

Element operator*(const Element& a, const Element& b) {
  a.check_same_algebra(b);
  Element out(a.alg_);
  const auto& orders = a.alg_.orders();
  for (const auto& [ka, ca] : a.terms_) {
    for (const auto& [kb, cb] : b.terms_) {
      bool vanishes = false;
      for (std::size_t g = 0; g < orders.size() && !vanishes; ++g)
        vanishes = exponent(ka, g) + exponent(kb, g) > orders[g];
      if (!vanishes) out.add_term(ka + kb, ca * cb);
    }
  }
  return out;
}

Element power(const Element& u, unsigned k) {
  Element out = Element::constant(u.algebra(), 1);
  for (unsigned j = 0; j < k && !out.is_zero(); ++j) out = out * u;
  return out;
}

std::string Element::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [k, c] : terms_) {
    if (!first) out << (sgn(c) < 0 ? " - " : " + ");
    else if (sgn(c) < 0) out << "-";
    Rational mag = abs(c);
    bool unit = k != 0 && mag == 1;
    if (!unit) out << mag.get_str();
    bool need_sep = !unit;
    for (std::size_t a = 0; a < alg_.size(); ++a) {
      unsigned e = exponent(k, a);
      if (e == 0) continue;
      out << (need_sep ? " " : "") << alg_.names()[a];
      if (e > 1) out << "^" << e;
      need_sep = true;
    }
    first = false;
  }
  return out.str();
}

}  // namespace hermcheck
