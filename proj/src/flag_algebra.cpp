#include "hermcheck/flag_algebra.hpp"

#include "hermcheck/linear_feasibility.hpp"

namespace hermcheck {

FlagA::FlagA(unsigned n)
    : n_(n), roots_(RootSystem::type_a(n)), alg_(root_algebra(roots_)) {}

std::size_t FlagA::index(unsigned j, unsigned k) const {
  if (j < 1 || j >= k || k > n_)
    throw InputError("alpha index (" + std::to_string(j) + "," + std::to_string(k) +
                     ") needs 1 <= j < k <= " + std::to_string(n_));
  // pairs (j', k') with j' < j come first
  std::size_t before = 0;
  for (unsigned r = 1; r < j; ++r) before += n_ - r;
  return before + (k - j - 1);
}

Element FlagA::alpha(unsigned j, unsigned k) const {
  return Element::generator(alg_, index(j, k));
}

Element FlagA::all_ones() const {
  return Element::linear(alg_, std::vector<Rational>(alg_.size(), Rational(1)));
}

std::vector<Element> FlagA::char_classes() const {
  auto delta = [](unsigned a, unsigned b) { return a == b ? 1 : 0; };
  std::vector<Element> out;
  for (unsigned i = 1; i < n_; ++i) {
    std::vector<Rational> c(alg_.size(), Rational(0));
    for (unsigned j = 1; j <= n_; ++j)
      for (unsigned k = j + 1; k <= n_; ++k)
        c[index(j, k)] =
            (delta(i, j) - delta(i, k)) - (delta(i + 1, j) - delta(i + 1, k));
    out.push_back(Element::linear(alg_, c));
  }
  return out;
}

Element FlagA::omega_combo(const std::vector<Rational>& coeffs) const {
  if (coeffs.size() != n_ - 1)
    throw InputError("omega combination needs " + std::to_string(n_ - 1) + " coefficients");
  auto classes = char_classes();
  Element out(alg_);
  for (std::size_t i = 0; i < coeffs.size(); ++i) out += classes[i] * coeffs[i];
  return out;
}

const char* to_string(PositivityProfile::Kind kind) {
  switch (kind) {
    case PositivityProfile::Kind::strict: return "strict";
    case PositivityProfile::Kind::weak: return "weak";
    default: return "indefinite";
  }
}

PositivityProfile positivity_profile(const Element& elt) {
  auto c = elt.linear_coefficients();
  PositivityProfile out;
  for (std::size_t a = 0; a < c.size(); ++a) {
    if (sgn(c[a]) < 0) return {PositivityProfile::Kind::indefinite, {}};
    if (sgn(c[a]) == 0) out.zero_generators.push_back(a);
  }
  out.kind = out.zero_generators.empty() ? PositivityProfile::Kind::strict
                                         : PositivityProfile::Kind::weak;
  return out;
}

Rational top_intersection(std::span<const Element> factors) {
  if (factors.empty()) throw InputError("top_intersection needs at least one factor");
  const InvariantFormAlgebra& alg = factors.front().algebra();
  unsigned total = 0;
  for (const Element& f : factors) {
    if (!(f.algebra() == alg)) throw InputError("top_intersection: factors from different algebras");
    if (f.is_zero()) return 0;
    auto d = f.degree();
    if (!d) throw InputError("top_intersection: factor is not homogeneous");
    total += *d;
  }
  if (total != alg.top_degree())
    throw InputError("top_intersection: total real degree " + std::to_string(2 * total) +
                     " differs from top degree " + std::to_string(2 * alg.top_degree()));
  Element prod = factors.front();
  for (std::size_t i = 1; i < factors.size() && !prod.is_zero(); ++i) prod = prod * factors[i];
  return prod.top();
}

Rational trace_in_algebra(const Element& omega, const Element& f) {
  if (positivity_profile(f).kind != PositivityProfile::Kind::strict)
    throw InputError("trace_in_algebra: F is not strictly positive");
  omega.linear_coefficients();
  unsigned m = f.algebra().top_degree();
  Element f_m1 = power(f, m - 1);
  Rational denom = (f_m1 * f).top();
  if (sgn(denom) == 0) throw InputError("trace_in_algebra: F^m vanishes");
  return Rational(m * (omega * f_m1).top() / denom);
}

namespace {

bool additive(const RootSystem& roots, const std::vector<Rational>& lambda) {
  for (std::size_t a = 0; a < roots.size(); ++a)
    for (std::size_t b = a + 1; b < roots.size(); ++b)
      if (auto s = roots.sum_index(a, b); s && lambda[a] + lambda[b] != lambda[*s]) return false;
  return true;
}

}  // namespace

bool kahler_lambda_check(const RootSystem& roots, const std::vector<Rational>& lambda) {
  if (lambda.size() != roots.size())
    throw InputError("expected " + std::to_string(roots.size()) + " lambda values, got " +
                     std::to_string(lambda.size()));
  for (std::size_t a = 0; a < lambda.size(); ++a)
    if (sgn(lambda[a]) <= 0)
      throw InputError("lambda for root " + roots.labels()[a] + " must be positive");
  return additive(roots, lambda);
}

bool kahler_lambda_check(const RootSystem& roots, const std::map<std::string, Rational>& lambda) {
  std::vector<Rational> values;
  for (const std::string& label : roots.labels()) {
    auto it = lambda.find(label);
    if (it == lambda.end()) throw InputError("missing lambda for root " + label);
    values.push_back(it->second);
  }
  for (const auto& [label, v] : lambda)
    if (!roots.index_of(label)) throw InputError("unknown root label " + label);
  return kahler_lambda_check(roots, values);
}

std::vector<Rational> ConeDecision::metric_lambda() const {
  if (kind != Kind::certificate) throw InputError("metric_lambda needs a certificate");
  std::vector<Rational> out;
  for (const Rational& m : mu) out.push_back(1 / m);
  return out;
}

ConeDecision cone_feasibility(const InvariantFormAlgebra& alg, const std::vector<Element>& classes) {
  std::size_t m = alg.size(), k = classes.size();
  Matrix<Rational> c;
  for (const Element& e : classes) {
    if (!(e.algebra() == alg)) throw InputError("cone_feasibility: class from another algebra");
    c.push_back(e.linear_coefficients());
  }

  // mu = 1 + s with s >= 0 and C s = -C 1.
  std::vector<Rational> b(k, Rational(0));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t a = 0; a < m; ++a) b[i] -= c[i][a];
  if (auto s = nonnegative_solution(c, b, m)) {
    ConeDecision out;
    for (std::size_t a = 0; a < m; ++a) out.mu.push_back(1 + (*s)[a]);
    return out;
  }

  // y = C^T (t+ - t-), y >= 0, sum y = 1. Unknowns: t+ (k), t- (k), y (m).
  std::size_t cols = 2 * k + m;
  Matrix<Rational> a(m + 1, std::vector<Rational>(cols, Rational(0)));
  std::vector<Rational> rhs(m + 1, Rational(0));
  for (std::size_t g = 0; g < m; ++g) {
    for (std::size_t i = 0; i < k; ++i) {
      a[g][i] = c[i][g];
      a[g][k + i] = -c[i][g];
    }
    a[g][2 * k + g] = -1;
    a[m][2 * k + g] = 1;
  }
  rhs[m] = 1;
  auto x = nonnegative_solution(a, rhs, cols);
  if (!x) throw std::logic_error("cone_feasibility: neither alternative is feasible");
  ConeDecision out;
  out.kind = ConeDecision::Kind::witness;
  for (std::size_t i = 0; i < k; ++i) out.t.push_back((*x)[i] - (*x)[k + i]);
  out.combination.assign(m, Rational(0));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t g = 0; g < m; ++g) out.combination[g] += out.t[i] * c[i][g];
  return out;
}

ConeDecision cone_feasibility(const FlagA& flag, const std::vector<Element>& classes) {
  ConeDecision out = cone_feasibility(flag.algebra(), classes);
  if (out.kind == ConeDecision::Kind::witness)
    out.witness_additive = additive(flag.roots(), out.combination);
  return out;
}

Rational astheno_scaling(const Element& f1, const Element& f2, const Element& omega, unsigned p) {
  Element omega_p = power(omega, p);
  const Element a[] = {f1, f1, omega_p};
  const Element b[] = {f2, f2, omega_p};
  Rational top1 = top_intersection(a);
  Rational top2 = top_intersection(b);
  if (sgn(top1) == 0 || sgn(top2) == 0)
    throw InputError("no real scaling: a top intersection vanishes (t must be > 0)");
  if (sgn(top1) == sgn(top2))
    throw InputError("no real scaling: top intersections have the same sign");
  return Rational(-top2 / top1);
}

InvariantFormAlgebra root_algebra(const RootSystem& roots) {
  return InvariantFormAlgebra::squarefree(roots.labels());
}

Element root_pairing_form(const RootSystem& roots) {
  InvariantFormAlgebra alg = root_algebra(roots);
  Element out(alg);
  for (std::size_t a = 0; a < roots.size(); ++a)
    for (std::size_t b = a + 1; b < roots.size(); ++b)
      out += Element::generator(alg, a) * Element::generator(alg, b) *
             Rational(2 * roots.inner(a, b));
  return out;
}

}  // namespace hermcheck
