#pragma once

#include <map>
#include <string>
#include <vector>

#include "hermcheck/serialize.hpp"
#include "support.hpp"

namespace hermcheck::test {

struct PropertyTally {
  std::size_t forms = 0;
  std::map<std::string, std::size_t> checked;
  std::vector<std::string> failures;  // "law on algebra: detail"

  bool ok() const { return failures.empty(); }
};

/// Exterior-algebra and Dolbeault laws on `rounds` random forms drawn over
/// the integrable corpus models (plus the flat torus), cycling the models.
inline PropertyTally run_property_suite(std::uint64_t seed, std::size_t rounds) {
  std::vector<std::pair<std::string, ComplexLieAlgebra>> models;
  models.emplace_back("flat8", ComplexLieAlgebra::make(LieAlgebra::abelian(8),
                                                       AlmostComplexStructure::standard(8)));
  models.emplace_back("nilmanifold_ex43", complex_model("nilmanifold_ex43"));
  models.emplace_back("su3_group", complex_model("su3_group"));

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> deg(1, 3);
  PropertyTally tally;
  auto law = [&](const std::string& name, const std::string& model, bool ok,
                 const std::string& detail) {
    ++tally.checked[name];
    if (!ok && tally.failures.size() < 20)
      tally.failures.push_back(name + " on " + model + ": " + detail);
  };

  for (std::size_t r = 0; r < rounds; ++r) {
    const auto& [name, m] = models[r % models.size()];
    std::size_t dim = m.dim();
    int p = deg(rng), q = deg(rng);
    Form u = random_form(rng, dim, p, 3), v = random_form(rng, dim, q, 3);
    Form w = random_form(rng, dim, 1, 2), u2 = random_form(rng, dim, p, 3);
    Scalar c = random_scalar(rng);
    tally.forms += 4;
    std::string shown = u.to_string();

    law("anticommutativity", name, wedge(u, v) == wedge(v, u) * Scalar((p * q) % 2 ? -1 : 1), shown);
    law("associativity", name, wedge(wedge(u, v), w) == wedge(u, wedge(v, w)), shown);
    law("bilinearity", name, wedge(u + u2 * c, v) == wedge(u, v) + wedge(u2, v) * c, shown);
    law("serialization", name, form_from_json(form_to_json(u), dim) == u, shown);

    Form du = m.d(u);
    law("leibniz", name,
        m.d(wedge(u, v)) == wedge(du, v) + wedge(u, m.d(v)) * Scalar(p % 2 ? -1 : 1), shown);
    law("d_squared", name, m.d(du).is_zero(), shown);

    const auto& j = m.complex_structure();
    BigradedForm bu = pq_decompose(j, u), bv = pq_decompose(j, v);
    law("reconstruction", name, bu.total() == u, shown);
    for (const auto& [pq_u, part_u] : bu.components)
      for (const auto& [pq_v, part_v] : bv.components)
        law("bigrading", name,
            pq_decompose(j, wedge(part_u, part_v))
                .is_pure(pq_u.first + pq_v.first, pq_u.second + pq_v.second),
            shown);
    law("d_equals_del_plus_delbar", name, du == m.del(u) + m.delbar(u), shown);
    Form dcu = m.dc(u);
    law("ddc_anticommute", name, (m.d(dcu) + m.dc(du)).is_zero(), shown);
    law("dc_squared", name, m.dc(dcu).is_zero(), shown);
  }
  return tally;
}

}  // namespace hermcheck::test
