#include "hermcheck/form.hpp"

#include <sstream>

namespace hermcheck {

Monomial Monomial::from_indices(std::span<const std::size_t> indices) {
  std::uint64_t bits = 0;
  for (std::size_t i : indices) {
    if (i >= kMaxGenerators) throw InputError("generator index out of range");
    std::uint64_t bit = std::uint64_t{1} << i;
    if (bits & bit) throw InputError("repeated index in monomial");
    bits |= bit;
  }
  return Monomial(bits);
}

Monomial Monomial::from_indices(std::initializer_list<std::size_t> indices) {
  return from_indices(std::span<const std::size_t>(indices.begin(), indices.size()));
}

Monomial Monomial::volume(std::size_t dim) {
  if (dim > kMaxGenerators) throw InputError("dimension exceeds 64 generators");
  return Monomial(dim == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << dim) - 1);
}

std::vector<std::size_t> Monomial::indices() const {
  std::vector<std::size_t> out;
  for (std::uint64_t b = bits_; b != 0; b &= b - 1)
    out.push_back(static_cast<std::size_t>(std::countr_zero(b)));
  return out;
}

bool operator<(Monomial a, Monomial b) {
  int da = a.degree(), db = b.degree();
  if (da != db) return da < db;
  std::uint64_t diff = a.bits() ^ b.bits();
  if (diff == 0) return false;
  // the set holding the smallest differing index sorts first
  return (a.bits() & (diff & (~diff + 1))) != 0;
}

int merge_sign(Monomial a, Monomial b) {
  std::uint64_t x = a.bits(), y = b.bits();
  if (x & y) return 0;
  // count pairs (i in a, j in b) with i > j
  int inversions = 0;
  for (std::uint64_t rest = y; rest != 0; rest &= rest - 1) {
    int j = std::countr_zero(rest);
    std::uint64_t above = j == 63 ? 0 : (x >> (j + 1));
    inversions += std::popcount(above);
  }
  return (inversions & 1) ? -1 : 1;
}

Form::Form(std::size_t dim) : dim_(dim) {
  if (dim > kMaxGenerators) throw InputError("dimension exceeds 64 generators");
}

Form Form::constant(std::size_t dim, const Scalar& c) {
  return monomial(dim, Monomial(), c);
}

Form Form::generator(std::size_t dim, std::size_t index) {
  if (index >= dim) throw InputError("generator index out of range");
  return monomial(dim, Monomial(std::uint64_t{1} << index));
}

Form Form::monomial(std::size_t dim, Monomial m, const Scalar& c) {
  Form f(dim);
  f.add_term(m, c);
  return f;
}

Form Form::two_form(
    std::size_t dim,
    std::initializer_list<std::tuple<std::size_t, std::size_t, long>> terms) {
  Form f(dim);
  for (const auto& [a, b, c] : terms)
    f += wedge(generator(dim, a), generator(dim, b)) * Scalar(c);
  return f;
}

Scalar Form::coefficient(Monomial m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Scalar() : it->second;
}

std::optional<int> Form::degree() const {
  if (terms_.empty()) return std::nullopt;
  int d = terms_.begin()->first.degree();
  if (terms_.rbegin()->first.degree() != d) return std::nullopt;
  return d;
}

Form Form::homogeneous_part(int k) const {
  Form out(dim_);
  for (const auto& [m, c] : terms_)
    if (m.degree() == k) out.terms_.emplace_hint(out.terms_.end(), m, c);
  return out;
}

bool Form::is_real() const {
  for (const auto& [m, c] : terms_)
    if (!c.is_real()) return false;
  return true;
}

Form& Form::add_term(Monomial m, const Scalar& c) {
  if (c.is_zero()) return *this;
  if (dim_ < kMaxGenerators && (m.bits() >> dim_) != 0)
    throw InputError("monomial index exceeds form dimension");
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
  return *this;
}

void Form::check_same_dim(const Form& o) const {
  if (dim_ != o.dim_)
    throw InputError("form dimension mismatch: " + std::to_string(dim_) +
                     " vs " + std::to_string(o.dim_));
}

Form Form::operator-() const {
  Form out(*this);
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

Form& Form::operator+=(const Form& o) {
  check_same_dim(o);
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Form& Form::operator-=(const Form& o) {
  check_same_dim(o);
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Form& Form::operator*=(const Scalar& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, coeff] : terms_) coeff *= c;
  return *this;
}

Form Form::conj() const {
  Form out(*this);
  for (auto& [m, c] : out.terms_) c = c.conj();
  return out;
}

Form Form::extended(std::size_t new_dim) const {
  if (new_dim < dim_) throw InputError("cannot shrink a form's dimension");
  Form out(new_dim);
  out.terms_ = terms_;
  return out;
}

std::string Form::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    std::string coeff = c.to_string();
    bool compound = coeff.find(' ') != std::string::npos;
    if (!first && !compound && coeff[0] == '-') {
      out << " - ";
      coeff.erase(0, 1);
    } else if (!first) {
      out << " + ";
    }
    if (compound) out << "(" << coeff << ")";
    else if (coeff == "-1" && m.degree() > 0) out << "-";
    else if (coeff != "1" || m.degree() == 0) out << coeff;
    if (m.degree() > 0) {
      if (coeff != "1" && coeff != "-1") out << " ";
      out << "e";
      auto idx = m.indices();
      bool wide = dim_ > 9;
      for (std::size_t k = 0; k < idx.size(); ++k) {
        if (wide && k > 0) out << ",";
        out << idx[k] + 1;
      }
    }
    first = false;
  }
  return out.str();
}

Form wedge(const Form& u, const Form& v) {
  if (u.dim() != v.dim())
    throw InputError("wedge: dimension mismatch " + std::to_string(u.dim()) +
                     " vs " + std::to_string(v.dim()));
  Form out(u.dim());
  for (const auto& [mu, cu] : u.terms()) {
    for (const auto& [mv, cv] : v.terms()) {
      int s = merge_sign(mu, mv);
      if (s == 0) continue;
      Scalar c = cu * cv;
      if (s < 0) c = -c;
      out.add_term(Monomial(mu.bits() | mv.bits()), c);
    }
  }
  return out;
}

Form power(const Form& u, unsigned k) {
  Form out = Form::constant(u.dim(), 1);
  for (unsigned j = 0; j < k; ++j) {
    out = wedge(out, u);
    if (out.is_zero()) break;
  }
  return out;
}

Scalar top_coefficient(const Form& u, Monomial vol) { return u.coefficient(vol); }

Scalar top_coefficient(const Form& u) {
  return u.coefficient(Monomial::volume(u.dim()));
}

Form substitute(const Form& u, std::span<const Form> images) {
  if (images.size() != u.dim())
    throw InputError("substitute: expected one image per generator");
  std::size_t target = images.empty() ? u.dim() : images.front().dim();
  for (const Form& img : images) {
    if (img.dim() != target) throw InputError("substitute: image dimension mismatch");
    if (!img.is_zero() && img.degree() != 1)
      throw InputError("substitute: images must be 1-forms");
  }
  Form out(target);
  for (const auto& [m, c] : u.terms()) {
    Form acc = Form::constant(target, c);
    for (std::size_t idx : m.indices()) {
      acc = wedge(acc, images[idx]);
      if (acc.is_zero()) break;
    }
    out += acc;
  }
  return out;
}

}  // namespace hermcheck
