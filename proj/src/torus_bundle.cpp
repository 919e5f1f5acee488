#include "hermcheck/torus_bundle.hpp"

#include "hermcheck/metric.hpp"

namespace hermcheck {

namespace {

void check_curvature_shapes(const TorusBundleSpec& spec) {
  if (spec.curvatures.size() % 2 != 0)
    throw InputError("torus bundle needs an even number of curvature forms");
  std::size_t dim = spec.base.dim();
  if (dim + spec.curvatures.size() > kMaxGenerators)
    throw InputError("torus bundle total space exceeds 64 generators");
  for (std::size_t l = 0; l < spec.curvatures.size(); ++l) {
    const Form& w = spec.curvatures[l];
    std::string label = "curvature " + std::to_string(l + 1);
    if (w.dim() != dim) throw InputError(label + " does not live on the base");
    if (!w.is_zero() && (w.degree() != 2 || !w.is_real()))
      throw InputError(label + " must be a real 2-form");
  }
}

void check_base_positive(const TorusBundleSpec& spec, const Form& f_base) {
  HermitianCandidate cand = HermitianCandidate::make(spec.base, f_base);
  if (!is_positive(cand)) throw InputError("base fundamental form is not positive");
}

}  // namespace

ComplexLieAlgebra total_space(const TorusBundleSpec& spec) {
  check_curvature_shapes(spec);
  const ComplexLieAlgebra& base = spec.base;
  std::size_t dim = base.dim();
  for (std::size_t l = 0; l < spec.curvatures.size(); ++l)
    if (!base.d(spec.curvatures[l]).is_zero())
      throw InputError("curvature " + std::to_string(l + 1) + " is not closed");
  for (std::size_t j = 0; j + 1 < spec.curvatures.size(); j += 2) {
    Form combo = spec.curvatures[j] - spec.curvatures[j + 1] * Scalar::i();
    Form obstruction = pq_decompose(base.complex_structure(), combo).component(0, 2);
    if (!obstruction.is_zero())
      throw InputError("curvatures " + std::to_string(j + 1) + " and " +
                       std::to_string(j + 2) + " have a (0,2)-component " +
                       obstruction.to_string());
  }

  std::size_t total = dim + spec.curvatures.size();
  LieAlgebraSpec ext;
  ext.dim = total;
  for (const Form& d : base.algebra().spec().d1) ext.d1.push_back(d.extended(total));
  for (const Form& w : spec.curvatures) ext.d1.push_back(w.extended(total));

  const Matrix<Scalar>& jb = base.complex_structure().matrix();
  Matrix<Scalar> j(total, std::vector<Scalar>(total));
  for (std::size_t a = 0; a < dim; ++a)
    for (std::size_t b = 0; b < dim; ++b) j[a][b] = jb[a][b];
  for (std::size_t a = dim; a + 1 < total; a += 2) {
    j[a][a + 1] = 1;
    j[a + 1][a] = -1;
  }
  return ComplexLieAlgebra::make(LieAlgebra::from_spec(std::move(ext)),
                                 AlmostComplexStructure::from_matrix(std::move(j)));
}

Form canonical_metric(const TorusBundleSpec& spec, const Form& f_base) {
  check_curvature_shapes(spec);
  check_base_positive(spec, f_base);
  std::size_t total = spec.base.dim() + spec.curvatures.size();
  Form out = f_base.extended(total);
  for (std::size_t a = spec.base.dim(); a + 1 < total; a += 2)
    out += wedge(Form::generator(total, a), Form::generator(total, a + 1));
  return out;
}

Prop31Report verify_prop31(const TorusBundleSpec& spec, const Form& f_base, unsigned k) {
  if (spec.curvatures.size() != 2)
    throw InputError("the identity is stated for T^2 fibers (exactly two curvatures)");
  ComplexLieAlgebra tot = total_space(spec);
  std::size_t n = tot.complex_dim();
  if (k < 1 || k + 2 > n)
    throw InputError("k must satisfy 1 <= k <= " + std::to_string(n >= 2 ? n - 2 : 0));
  if (!spec.base.d(f_base).is_zero()) throw InputError("base fundamental form is not Kahler");
  Form omega = canonical_metric(spec, f_base);

  std::size_t total = tot.dim();
  const Form& w1 = spec.curvatures[0];
  const Form& w2 = spec.curvatures[1];
  Form base_rhs = wedge(wedge(w1, w1) + wedge(w2, w2), power(f_base, k - 1)) *
                  Scalar(static_cast<long>(k));

  Prop31Report report;
  report.k = k;
  report.lhs = tot.d(tot.dc(power(omega, k)));
  report.rhs = base_rhs.extended(total);
  report.difference = report.lhs - report.rhs;
  report.holds = report.difference.is_zero();
  return report;
}

MatsuoResult matsuo_condition(const Form& w1, const Form& w2, const Form& f_base,
                              unsigned n_total) {
  if (n_total < 3) throw InputError("matsuo_condition needs total complex dimension >= 3");
  if (w1.dim() != f_base.dim() || w2.dim() != f_base.dim())
    throw InputError("matsuo_condition: dimension mismatch");
  MatsuoResult out;
  std::size_t degree = 4 + 2 * static_cast<std::size_t>(n_total - 3);
  if (degree > f_base.dim()) {
    out.value = out.vacuous = true;
    out.warning = "wedge of degree " + std::to_string(degree) +
                  " exceeds the base dimension " + std::to_string(f_base.dim()) +
                  "; condition holds vacuously";
    return out;
  }
  Form lhs = wedge(wedge(w1, w1) + wedge(w2, w2), power(f_base, n_total - 3));
  out.value = lhs.is_zero();
  return out;
}

MatsuoResult matsuo_condition(const Element& w1, const Element& w2, const Element& f_base,
                              unsigned n_total) {
  if (n_total < 3) throw InputError("matsuo_condition needs total complex dimension >= 3");
  MatsuoResult out;
  unsigned degree = 2 + (n_total - 3);
  unsigned top = f_base.algebra().top_degree();
  if (degree > top) {
    out.value = out.vacuous = true;
    out.warning = "wedge of real degree " + std::to_string(2 * degree) +
                  " exceeds the base top degree " + std::to_string(2 * top) +
                  "; condition holds vacuously";
    return out;
  }
  out.value = ((w1 * w1 + w2 * w2) * power(f_base, n_total - 3)).is_zero();
  return out;
}

std::vector<Scalar> balanced_trace_criterion(const TorusBundleSpec& spec, const Form& f_base) {
  check_curvature_shapes(spec);
  HermitianCandidate cand = HermitianCandidate::make(spec.base, f_base);
  if (!is_positive(cand)) throw InputError("base fundamental form is not positive");
  std::size_t n = cand.n();
  if (n > 1 && !spec.base.d(power(f_base, static_cast<unsigned>(n - 1))).is_zero())
    throw InputError("base fundamental form is not balanced");
  std::vector<Scalar> out;
  for (const Form& w : spec.curvatures) out.push_back(trace(w, cand));
  return out;
}

}  // namespace hermcheck
