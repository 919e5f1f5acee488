#include <doctest.h>

#include "hermcheck/metric.hpp"
#include "hermcheck/torus_bundle.hpp"
#include "support.hpp"

using namespace hermcheck;
using hermcheck::test::diagonal;
using hermcheck::test::e;
using hermcheck::test::flat;
using hermcheck::test::random_11;

namespace {

TorusBundleSpec ex43_bundle() {
  Form a1 = e(6, {1, 2}) + e(6, {3, 4}) - e(6, {5, 6}, 2);
  Form a2 = e(6, {3, 4}) - e(6, {5, 6});
  return TorusBundleSpec{flat(6), {a1, a2}};
}

}  // namespace

TEST_CASE("total space of the example bundle is the nilpotent algebra") {
  ComplexLieAlgebra total = total_space(ex43_bundle());
  auto p = test::lie_payload("nilmanifold_ex43");
  CHECK(total.algebra().spec() == p.spec);
  CHECK(total.complex_structure().matrix() ==
        AlmostComplexStructure::from_pairs(8, p.pairs).matrix());
  CHECK(canonical_metric(ex43_bundle(), diagonal(6, {1, 1, 1})) == test::named_metric(p, "F_bal"));
  CHECK(canonical_metric(ex43_bundle(), diagonal(6, {1, 1, 5})) == test::named_metric(p, "F_AK"));
}

TEST_CASE("zero curvature gives the product torus") {
  TorusBundleSpec spec{flat(4), {Form(4), Form(4)}};
  ComplexLieAlgebra total = total_space(spec);
  CHECK(total.algebra().spec() == LieAlgebraSpec::abelian(6));
}

TEST_CASE("total_space input errors") {
  CHECK_THROWS_AS(total_space(TorusBundleSpec{flat(4), {Form(4)}}), InputError);
  CHECK_THROWS_AS(total_space(TorusBundleSpec{flat(4), {e(4, {1, 2}), Form(6)}}), InputError);
  // e13 - e24 is of type (2,0)+(0,2): theta1 - i theta2 picks up a (0,2)-part.
  try {
    total_space(TorusBundleSpec{flat(4), {e(4, {1, 3}) - e(4, {2, 4}), Form(4)}});
    FAIL("expected an error");
  } catch (const InputError& err) {
    CHECK(std::string(err.what()).find("(0,2)") != std::string::npos);
  }
  // curvature that is not closed on a non-abelian base
  ComplexLieAlgebra nil = test::complex_model("nilmanifold_ex43");
  try {
    total_space(TorusBundleSpec{nil, {e(8, {1, 7}), Form(8)}});
    FAIL("expected an error");
  } catch (const InputError& err) {
    CHECK(std::string(err.what()).find("not closed") != std::string::npos);
  }
  CHECK_THROWS_AS(canonical_metric(ex43_bundle(), diagonal(6, {1, -1, 1})), InputError);
}

TEST_CASE("the dd^c identity on the example bundle") {
  for (long c : {1L, 5L}) {
    for (unsigned k : {1U, 2U}) {
      Prop31Report r = verify_prop31(ex43_bundle(), diagonal(6, {1, 1, c}), k);
      CHECK(r.holds);
      CHECK(r.difference.is_zero());
      CHECK(r.k == k);
    }
  }
  CHECK_THROWS_AS(verify_prop31(ex43_bundle(), diagonal(6, {1, 1, 1}), 3), InputError);
  CHECK_THROWS_AS(verify_prop31(ex43_bundle(), diagonal(6, {1, 1, 1}), 0), InputError);
}

TEST_CASE("the dd^c identity on random bundles over T6 and T8") {
  std::mt19937_64 rng(20240601);
  int cases = 0;
  for (std::size_t dim : {6U, 8U}) {
    for (int t = 0; t < 12; ++t) {
      TorusBundleSpec spec{flat(dim), {random_11(rng, dim), random_11(rng, dim)}};
      std::uniform_int_distribution<long> lam(1, 4);
      std::vector<long> lambda(dim / 2);
      for (long& l : lambda) l = lam(rng);
      Form f = diagonal(dim, lambda);
      unsigned n = static_cast<unsigned>(dim / 2 + 1);
      for (unsigned k = 1; k + 2 <= n; ++k) {
        Prop31Report r = verify_prop31(spec, f, k);
        CHECK_MESSAGE(r.holds, "dim ", dim, " case ", t, " k ", k, ": ", r.difference.to_string());
        // recompute the left side on the total space directly
        ComplexLieAlgebra total = total_space(spec);
        Form omega = canonical_metric(spec, f);
        CHECK(r.lhs == total.d(total.dc(power(omega, k))));
      }
      ++cases;
    }
  }
  CHECK(cases >= 20);
}

TEST_CASE("Matsuo condition agrees with classification of the total space") {
  TorusBundleSpec spec = ex43_bundle();
  ComplexLieAlgebra total = total_space(spec);
  for (long c : {1L, 2L, 5L, 7L}) {
    Form f = diagonal(6, {1, 1, c});
    MatsuoResult m = matsuo_condition(spec.curvatures[0], spec.curvatures[1], f, 4);
    CHECK_FALSE(m.vacuous);
    MetricReport r = classify(HermitianCandidate::make(total, canonical_metric(spec, f)));
    CHECK(m.value == r.astheno.value());
    CHECK(m.value == (c == 5));
  }
  MatsuoResult over = matsuo_condition(spec.curvatures[0], spec.curvatures[1],
                                       diagonal(6, {1, 1, 1}), 6);
  CHECK(over.vacuous);
  CHECK(over.value);
  CHECK_FALSE(over.warning.empty());
  CHECK_THROWS_AS(matsuo_condition(spec.curvatures[0], spec.curvatures[1],
                                   diagonal(6, {1, 1, 1}), 2),
                  InputError);
}

TEST_CASE("trace criterion agrees with balancedness of the total space") {
  TorusBundleSpec spec = ex43_bundle();
  auto t1 = balanced_trace_criterion(spec, diagonal(6, {1, 1, 1}));
  CHECK(t1 == std::vector<Scalar>{Scalar(0), Scalar(0)});
  auto t2 = balanced_trace_criterion(spec, diagonal(6, {1, 1, 5}));
  CHECK(t2 == std::vector<Scalar>{Scalar(Rational(8, 5)), Scalar(Rational(4, 5))});

  std::mt19937_64 rng(77);
  ComplexLieAlgebra total = total_space(spec);
  for (int t = 0; t < 10; ++t) {
    std::uniform_int_distribution<long> lam(1, 3);
    Form f = diagonal(6, {lam(rng), lam(rng), lam(rng)});
    auto traces = balanced_trace_criterion(spec, f);
    bool traceless = traces[0].is_zero() && traces[1].is_zero();
    MetricReport r = classify(HermitianCandidate::make(total, canonical_metric(spec, f)));
    CHECK(r.balanced == traceless);
  }

  ComplexLieAlgebra nil = test::complex_model("nilmanifold_ex43");
  auto p = test::lie_payload("nilmanifold_ex43");
  TorusBundleSpec over_nil{nil, {Form(8), Form(8)}};
  CHECK_THROWS_AS(balanced_trace_criterion(over_nil, test::named_metric(p, "F_AK")), InputError);
}
