#include "hermcheck/metric.hpp"

namespace hermcheck {

HermitianCandidate HermitianCandidate::make(ComplexLieAlgebra alg, Form fundamental) {
  if (fundamental.dim() != alg.dim()) throw InputError("fundamental form: dimension mismatch");
  if (fundamental.degree() != 2 || !fundamental.is_real())
    throw InputError("fundamental form must be a nonzero real 2-form");
  if (!pq_decompose(alg.complex_structure(), fundamental).is_pure(1, 1))
    throw InputError("fundamental form is not of type (1,1)");
  return HermitianCandidate(std::move(alg), std::move(fundamental));
}

Matrix<Scalar> metric_matrix(const Form& fundamental, const AlmostComplexStructure& j) {
  std::size_t dim = j.dim();
  Matrix<Scalar> f(dim, std::vector<Scalar>(dim));
  for (const auto& [m, c] : fundamental.terms()) {
    if (m.degree() != 2) throw InputError("metric_matrix: expected a 2-form");
    auto idx = m.indices();
    f[idx[0]][idx[1]] = c;
    f[idx[1]][idx[0]] = -c;
  }
  // g(e_a, e_b) = sum_c F(e_a, e_c) I[c][b]
  return multiply(f, j.vector_action());
}

bool is_positive(const Form& fundamental, const AlmostComplexStructure& j) {
  Matrix<Scalar> g = metric_matrix(fundamental, j);
  std::size_t n = g.size();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (!(g[a][b] == g[b][a]) || !g[a][b].is_real())
        throw InputError("fundamental form is not J-invariant (g not symmetric)");
  // Elimination without row exchanges: the k-th pivot is D_k / D_(k-1).
  for (std::size_t k = 0; k < n; ++k) {
    if (g[k][k].is_zero() || g[k][k].sign() < 0) return false;
    Scalar inv = g[k][k].inverse();
    for (std::size_t i = k + 1; i < n; ++i) {
      if (g[i][k].is_zero()) continue;
      Scalar factor = g[i][k] * inv;
      for (std::size_t c = k; c < n; ++c) g[i][c] -= factor * g[k][c];
    }
  }
  return true;
}

bool is_positive(const HermitianCandidate& cand) {
  return is_positive(cand.fundamental_form(), cand.algebra().complex_structure());
}

MetricReport classify(const HermitianCandidate& cand) {
  if (!is_positive(cand)) throw InputError("classify: fundamental form is not positive");
  const ComplexLieAlgebra& alg = cand.algebra();
  const Form& f = cand.fundamental_form();
  std::size_t n = cand.n();
  MetricReport report;
  auto record = [&](const char* name, const Form& witness) {
    if (!witness.is_zero()) report.witnesses.emplace(name, witness);
    return witness.is_zero();
  };
  auto ddc = [&](const Form& u) { return alg.d(alg.dc(u)); };

  Form f_n1 = power(f, static_cast<unsigned>(n - 1));
  report.kahler = record("kahler", alg.d(f));
  report.balanced = record("balanced", alg.d(f_n1));
  report.skt = record("skt", ddc(f));
  report.gauduchon = record("gauduchon", ddc(f_n1));
  if (n >= 3) report.astheno = record("astheno", ddc(power(f, static_cast<unsigned>(n - 2))));
  return report;
}

Scalar trace(const Form& omega, const Form& fundamental, std::size_t n) {
  if (omega.dim() != fundamental.dim()) throw InputError("trace: dimension mismatch");
  if (n == 0) throw InputError("trace: zero complex dimension");
  Monomial vol = Monomial::volume(fundamental.dim());
  Form f_n1 = power(fundamental, static_cast<unsigned>(n - 1));
  Scalar denom = top_coefficient(wedge(f_n1, fundamental), vol);
  if (denom.is_zero()) throw InputError("trace: degenerate form (F^n = 0)");
  return Scalar(static_cast<long>(n)) * top_coefficient(wedge(omega, f_n1), vol) / denom;
}

Scalar trace(const Form& omega, const HermitianCandidate& cand) {
  return trace(omega, cand.fundamental_form(), cand.n());
}

}  // namespace hermcheck
