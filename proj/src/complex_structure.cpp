#include "hermcheck/complex_structure.hpp"

namespace hermcheck {

namespace {

Form one_form(std::size_t dim, const std::vector<Scalar>& coeffs) {
  Form f(dim);
  for (std::size_t b = 0; b < coeffs.size(); ++b)
    f.add_term(Monomial(std::uint64_t{1} << b), coeffs[b]);
  return f;
}

}  // namespace

AlmostComplexStructure AlmostComplexStructure::from_pairs(
    std::size_t dim, const std::vector<std::pair<std::size_t, std::size_t>>& pairs) {
  if (dim % 2 != 0) throw InputError("complex structure needs an even dimension");
  if (pairs.size() * 2 != dim) throw InputError("pairs must cover every generator");
  Matrix<Scalar> j(dim, std::vector<Scalar>(dim));
  std::vector<bool> seen(dim, false);
  for (auto [a, b] : pairs) {
    if (a >= dim || b >= dim) throw InputError("complex structure pair index out of range");
    if (a == b || seen[a] || seen[b])
      throw InputError("complex structure pairs must cover every generator exactly once");
    seen[a] = seen[b] = true;
    j[a][b] = 1;
    j[b][a] = -1;
  }
  return AlmostComplexStructure(build(std::move(j)));
}

AlmostComplexStructure AlmostComplexStructure::standard(std::size_t dim) {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t a = 0; a + 1 < dim; a += 2) pairs.emplace_back(a, a + 1);
  return from_pairs(dim, pairs);
}

AlmostComplexStructure AlmostComplexStructure::from_matrix(Matrix<Scalar> j) {
  return AlmostComplexStructure(build(std::move(j)));
}

std::shared_ptr<const AlmostComplexStructure::Data> AlmostComplexStructure::build(
    Matrix<Scalar> j) {
  auto data = std::make_shared<Data>();
  std::size_t dim = j.size();
  if (dim == 0 || dim % 2 != 0) throw InputError("complex structure needs an even dimension");
  for (const auto& row : j) {
    if (row.size() != dim) throw InputError("complex structure matrix must be square");
    for (const Scalar& x : row)
      if (!x.is_real()) throw InputError("complex structure matrix must be real");
  }
  Matrix<Scalar> sq = multiply(j, j);
  for (std::size_t a = 0; a < dim; ++a)
    for (std::size_t b = 0; b < dim; ++b)
      if (!(sq[a][b] == Scalar(a == b ? -1 : 0)))
        throw InputError("complex structure does not satisfy J^2 = -Id");

  data->dim = dim;
  for (std::size_t a = 0; a < dim; ++a) {
    data->j_images.push_back(one_form(dim, j[a]));
    data->j_inverse_images.push_back(-data->j_images.back());
  }

  // (1,0)-coframe: independent images of (Id - iJ) on the generator coframe.
  std::size_t n = dim / 2;
  Matrix<Scalar> chosen;
  for (std::size_t a = 0; a < dim && chosen.size() < n; ++a) {
    std::vector<Scalar> v(dim);
    v[a] = 1;
    for (std::size_t b = 0; b < dim; ++b) v[b] -= Scalar::i() * j[a][b];
    chosen.push_back(v);
    if (rank(chosen) < chosen.size()) chosen.pop_back();
  }
  if (chosen.size() != n) throw std::logic_error("(1,0)-space has wrong dimension");

  Matrix<Scalar> basis = chosen;  // psi_b = sum_a basis[b][a] e^a
  for (std::size_t k = 0; k < n; ++k) {
    std::vector<Scalar> conj_row(dim);
    for (std::size_t a = 0; a < dim; ++a) conj_row[a] = chosen[k][a].conj();
    basis.push_back(std::move(conj_row));
  }
  auto inv = inverse(basis);
  if (!inv) throw std::logic_error("coframe and its conjugate are dependent");

  for (std::size_t k = 0; k < n; ++k) data->phi.push_back(one_form(dim, chosen[k]));
  for (std::size_t b = 0; b < dim; ++b) data->from_psi.push_back(one_form(dim, basis[b]));
  // e^a = sum_b inv[a][b] psi_b
  for (std::size_t a = 0; a < dim; ++a) data->to_psi.push_back(one_form(dim, (*inv)[a]));
  data->j = std::move(j);
  return data;
}

Form AlmostComplexStructure::apply(const Form& u) const {
  if (u.dim() != dim()) throw InputError("complex structure: dimension mismatch");
  return substitute(u, data_->j_images);
}

Form AlmostComplexStructure::apply_inverse(const Form& u) const {
  if (u.dim() != dim()) throw InputError("complex structure: dimension mismatch");
  return substitute(u, data_->j_inverse_images);
}

Matrix<Scalar> AlmostComplexStructure::vector_action() const {
  std::size_t n = dim();
  Matrix<Scalar> out(n, std::vector<Scalar>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) out[a][b] = -data_->j[a][b];
  return out;  // column b holds the components of I e_b
}

Form BigradedForm::component(int p, int q) const {
  auto it = components.find({p, q});
  return it == components.end() ? Form(dim) : it->second;
}

Form BigradedForm::total() const {
  Form sum(dim);
  for (const auto& [pq, f] : components) sum += f;
  return sum;
}

bool BigradedForm::is_pure(int p, int q) const {
  for (const auto& [pq, f] : components)
    if (pq != std::make_pair(p, q) && !f.is_zero()) return false;
  return true;
}

BigradedForm pq_decompose(const AlmostComplexStructure& j, const Form& u) {
  if (u.dim() != j.dim()) throw InputError("pq_decompose: dimension mismatch");
  std::size_t n = j.complex_dim();
  std::uint64_t holo_mask = (std::uint64_t{1} << n) - 1;
  Form in_coframe = substitute(u, j.to_coframe());
  std::map<std::pair<int, int>, Form> grouped;
  for (const auto& [m, c] : in_coframe.terms()) {
    int p = std::popcount(m.bits() & holo_mask);
    int q = std::popcount(m.bits() >> n);
    auto [it, inserted] = grouped.try_emplace({p, q}, Form(u.dim()));
    it->second.add_term(m, c);
  }
  BigradedForm out;
  out.dim = u.dim();
  for (auto& [pq, f] : grouped) {
    Form back = substitute(f, j.from_coframe());
    if (!back.is_zero()) out.components.emplace(pq, std::move(back));
  }
  return out;
}

IntegrabilityReport is_integrable(const LieAlgebra& alg, const AlmostComplexStructure& j) {
  if (alg.dim() != j.dim()) throw InputError("is_integrable: dimension mismatch");
  IntegrabilityReport report;
  const auto& phi = j.holomorphic_coframe();
  for (std::size_t k = 0; k < phi.size(); ++k) {
    Form obstruction = pq_decompose(j, alg.d(phi[k])).component(0, 2);
    if (!obstruction.is_zero()) {
      report.ok = false;
      report.index = k;
      report.coframe_element = phi[k];
      report.obstruction = std::move(obstruction);
      return report;
    }
  }
  return report;
}

ComplexLieAlgebra ComplexLieAlgebra::make(LieAlgebra alg, AlmostComplexStructure j) {
  if (alg.dim() != j.dim())
    throw InputError("complex structure dimension " + std::to_string(j.dim()) +
                     " does not match algebra dimension " + std::to_string(alg.dim()));
  IntegrabilityReport report = is_integrable(alg, j);
  if (!report.ok)
    throw InputError("complex structure is not integrable: d(phi" +
                     std::to_string(*report.index + 1) + ") has (0,2)-part " +
                     report.obstruction.to_string());
  return ComplexLieAlgebra(std::move(alg), std::move(j));
}

Form ComplexLieAlgebra::dc(const Form& u) const {
  return j_.apply_inverse(alg_.d(j_.apply(u)));
}

Form ComplexLieAlgebra::del(const Form& u) const {
  Form out(dim());
  for (const auto& [pq, f] : pq_decompose(j_, u).components)
    out += pq_decompose(j_, alg_.d(f)).component(pq.first + 1, pq.second);
  return out;
}

Form ComplexLieAlgebra::delbar(const Form& u) const {
  Form out(dim());
  for (const auto& [pq, f] : pq_decompose(j_, u).components)
    out += pq_decompose(j_, alg_.d(f)).component(pq.first, pq.second + 1);
  return out;
}

}  // namespace hermcheck
