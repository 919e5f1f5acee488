#include <doctest.h>

#include "hermcheck/metric.hpp"
#include "support.hpp"

using namespace hermcheck;
using hermcheck::test::diagonal;
using hermcheck::test::e;
using hermcheck::test::flat;

TEST_CASE("positivity") {
  auto j = AlmostComplexStructure::standard(4);
  CHECK(is_positive(diagonal(4, {1, 2}), j));
  CHECK_FALSE(is_positive(diagonal(4, {1, -2}), j));
  CHECK_FALSE(is_positive(diagonal(4, {0, 1}), j));
  // e12 + e34 + s (e13 + e24) has Gram matrix [[I, sI], [sI, I]]: positive iff |s| < 1.
  for (int num = -6; num <= 6; ++num) {
    Rational s(num, 4);
    Form f = diagonal(4, {1, 1}) + (e(4, {1, 3}) + e(4, {2, 4})) * Scalar(s);
    CHECK(is_positive(f, j) == (abs(s) < 1));
  }
  CHECK_THROWS_AS(is_positive(e(4, {1, 3}) - e(4, {2, 4}), j), InputError);
  Matrix<Scalar> g = metric_matrix(diagonal(4, {3, 5}), j);
  CHECK(g[0][0] == Scalar(3));
  CHECK(g[2][2] == Scalar(5));
  CHECK(g[0][1].is_zero());
}

TEST_CASE("candidates must be real (1,1)-forms") {
  auto m = flat(4);
  CHECK_THROWS_AS(HermitianCandidate::make(m, e(4, {1, 3})), InputError);
  CHECK_THROWS_AS(HermitianCandidate::make(m, e(4, {1, 2}, Scalar::i())), InputError);
  CHECK_THROWS_AS(HermitianCandidate::make(m, e(4, {1, 2, 3})), InputError);
  CHECK_THROWS_AS(HermitianCandidate::make(m, Form(6)), InputError);
  CHECK_THROWS_AS(classify(HermitianCandidate::make(m, diagonal(4, {1, -1}))), InputError);
}

TEST_CASE("flat torus: every flag holds") {
  MetricReport r = classify(HermitianCandidate::make(flat(6), diagonal(6, {1, 2, 3})));
  CHECK(r.kahler);
  CHECK(r.balanced);
  CHECK(r.skt);
  CHECK(r.gauduchon);
  CHECK(r.astheno == std::optional<bool>(true));
  CHECK(r.witnesses.empty());

  MetricReport r2 = classify(HermitianCandidate::make(flat(4), diagonal(4, {1, 1})));
  CHECK_FALSE(r2.astheno.has_value());
}

TEST_CASE("nilpotent example: balanced and astheno metrics") {
  auto p = test::lie_payload("nilmanifold_ex43");
  ComplexLieAlgebra m = test::complex_model(p);
  MetricReport bal = classify(HermitianCandidate::make(m, test::named_metric(p, "F_bal")));
  CHECK(bal.balanced);
  CHECK_FALSE(bal.kahler);
  CHECK_FALSE(bal.astheno.value());
  CHECK(bal.witnesses.count("kahler"));
  CHECK(bal.witnesses.at("kahler") == m.d(test::named_metric(p, "F_bal")));

  MetricReport ak = classify(HermitianCandidate::make(m, test::named_metric(p, "F_AK")));
  CHECK(ak.astheno.value());
  CHECK_FALSE(ak.kahler);
  CHECK_FALSE(ak.balanced);
  CHECK(ak == classify(HermitianCandidate::make(m, test::named_metric(p, "F_AK"))));
}

TEST_CASE("balanced metrics in the diagonal family") {
  // F = e12 + e34 + c e56 + e78: dF^3 = 0 exactly when c = 1 (hand computation
  // of the e78 coefficient of F^3 against de7, de8).
  ComplexLieAlgebra m = test::complex_model("nilmanifold_ex43");
  for (long c = 1; c <= 6; ++c) {
    MetricReport r = classify(HermitianCandidate::make(m, diagonal(8, {1, 1, c, 1})));
    CHECK(r.balanced == (c == 1));
    CHECK(r.astheno.value() == (c == 5));
    CHECK_FALSE(r.kahler);
  }
}

TEST_CASE("traces") {
  Form f1 = diagonal(6, {1, 1, 1});
  CHECK(trace(f1, f1, 3) == Scalar(3));
  CHECK(trace(e(6, {1, 2}) + e(6, {3, 4}) - e(6, {5, 6}, 2), f1, 3) == Scalar(0));
  // a real (2,0)+(0,2) form
  CHECK(trace(e(6, {1, 3}) - e(6, {2, 4}), diagonal(6, {1, 2, 3}), 3) == Scalar(0));

  Form f2 = diagonal(6, {1, 1, 5});
  std::mt19937_64 rng(9);
  for (int t = 0; t < 20; ++t) {
    Form u = test::random_form(rng, 6, 2, 3, true), v = test::random_form(rng, 6, 2, 3, true);
    Scalar c = test::random_scalar(rng, true);
    CHECK(trace(u + v * c, f2, 3) == trace(u, f2, 3) + c * trace(v, f2, 3));
  }
  // trace of e^{2k-1,2k} against a diagonal metric is 1 / lambda_k
  CHECK(trace(e(6, {5, 6}), f2, 3) == Scalar(Rational(1, 5)));
  CHECK_THROWS_AS(trace(f1, e(6, {1, 2}), 3), InputError);
}
