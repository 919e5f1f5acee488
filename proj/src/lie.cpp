#include "hermcheck/lie.hpp"

namespace hermcheck {

LieAlgebraSpec LieAlgebraSpec::abelian(std::size_t dim) {
  return LieAlgebraSpec{dim, std::vector<Form>(dim, Form(dim))};
}

Form ce_d(const LieAlgebraSpec& alg, const Form& u) {
  if (u.dim() != alg.dim)
    throw InputError("ce_d: form has dimension " + std::to_string(u.dim()) +
                     ", algebra has " + std::to_string(alg.dim));
  if (alg.d1.size() != alg.dim) throw InputError("ce_d: d1 must list every generator");
  // d(e^{i1..ik}) = sum_p (-1)^p de^{ip} ^ (monomial without ip); de is even
  // so it can be moved to the front.
  Form out(alg.dim);
  for (const auto& [m, c] : u.terms()) {
    int position = 0;
    for (std::size_t idx : m.indices()) {
      const Form& de = alg.d1[idx];
      Monomial rest(m.bits() & ~(std::uint64_t{1} << idx));
      for (const auto& [t, ct] : de.terms()) {
        int s = merge_sign(t, rest);
        if (s == 0) continue;
        Scalar coeff = c * ct;
        if ((s < 0) != (position % 2 == 1)) coeff = -coeff;
        out.add_term(Monomial(t.bits() | rest.bits()), coeff);
      }
      ++position;
    }
  }
  return out;
}

JacobiReport validate(const LieAlgebraSpec& alg) {
  JacobiReport report;
  if (alg.d1.size() != alg.dim) {
    report.ok = false;
    report.message = "d1 lists " + std::to_string(alg.d1.size()) +
                     " generators, expected " + std::to_string(alg.dim);
    return report;
  }
  for (std::size_t k = 0; k < alg.dim; ++k) {
    const Form& de = alg.d1[k];
    if (de.dim() != alg.dim || (!de.is_zero() && de.degree() != 2) || !de.is_real()) {
      report.ok = false;
      report.generator = k;
      report.defect = de;
      report.message = "de" + std::to_string(k + 1) + " is not a real 2-form";
      return report;
    }
  }
  for (std::size_t k = 0; k < alg.dim; ++k) {
    Form dd = ce_d(alg, alg.d1[k]);
    if (!dd.is_zero()) {
      report.ok = false;
      report.generator = k;
      report.defect = dd;
      report.message = "d(de" + std::to_string(k + 1) + ") = " + dd.to_string() + " != 0";
      return report;
    }
  }
  return report;
}

LieAlgebra LieAlgebra::from_spec(LieAlgebraSpec spec) {
  JacobiReport report = validate(spec);
  if (!report.ok) throw InputError("invalid Lie algebra: " + report.message);
  return LieAlgebra(std::make_shared<const LieAlgebraSpec>(std::move(spec)));
}

}  // namespace hermcheck
