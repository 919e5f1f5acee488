#include <doctest.h>

#include <random>

#include "hermcheck/flag_algebra.hpp"
#include "oracles.hpp"

using namespace hermcheck;

TEST_CASE("invariant algebra arithmetic") {
  InvariantFormAlgebra alg({"x", "y"}, {1, 2});
  CHECK(alg.top_degree() == 3);
  Element x = Element::generator(alg, 0), y = Element::generator(alg, 1);
  CHECK((x * x).is_zero());
  CHECK((y * y * y).is_zero());
  CHECK((x * y * y).top() == 1);
  // (a x + b y)^3 = 3 a b^2 x y^2
  Element u = Element::linear(alg, {Rational(2), Rational(3)});
  CHECK(power(u, 3).top() == 3 * 2 * 9);
  CHECK(power(u, 3).degree() == 3U);
  CHECK((u + Element::constant(alg, 1)).degree() == std::nullopt);
  CHECK(u.linear_coefficients() == std::vector<Rational>{2, 3});
  CHECK_THROWS_AS((u * u).linear_coefficients(), InputError);
  CHECK((x * y).coefficient({1, 1}) == 1);
  CHECK((u - u).is_zero());
  CHECK(u.to_string() == "2 x + 3 y");
  CHECK((x * y * Rational(-1)).to_string() == "-x y");
  CHECK(alg.index_of("y") == 1U);
  CHECK_FALSE(alg.index_of("z"));

  InvariantFormAlgebra other({"x", "y"}, {1, 1});
  CHECK_THROWS_AS(x + Element::generator(other, 0), InputError);
  CHECK_THROWS_AS(InvariantFormAlgebra({"x", "x"}, {1, 1}), InputError);
  CHECK_THROWS_AS(InvariantFormAlgebra({"x"}, {16}), InputError);
  CHECK_THROWS_AS(InvariantFormAlgebra({"x"}, {0}), InputError);
  std::vector<std::string> many;
  for (int i = 0; i < 17; ++i) many.push_back("g" + std::to_string(i));
  CHECK_THROWS_AS(InvariantFormAlgebra::squarefree(many), InputError);
}

TEST_CASE("root systems") {
  RootSystem a3 = RootSystem::type_a(4);
  CHECK(a3.size() == 6);
  CHECK(a3.labels() == std::vector<std::string>{"a12", "a13", "a14", "a23", "a24", "a34"});
  std::size_t a12 = *a3.index_of("a12"), a23 = *a3.index_of("a23"), a34 = *a3.index_of("a34");
  CHECK(a3.sum_index(a12, a23) == a3.index_of("a13"));
  CHECK_FALSE(a3.sum_index(a12, a34));
  CHECK(a3.inner(a12, a12) == 2);
  CHECK(a3.inner(a12, a23) == -1);
  CHECK(a3.inner(a12, a34) == 0);

  RootSystem g2 = RootSystem::g2();
  CHECK(g2.labels() == std::vector<std::string>{"g10", "g01", "g11", "g21", "g31", "g32"});
  std::size_t s = 0, l = 1;
  CHECK(g2.inner(s, s) == 2);
  CHECK(g2.inner(l, l) == 6);
  CHECK(g2.inner(s, l) == -3);
  // long roots l, 3s+l, 3s+2l; short s, s+l, 2s+l
  for (const char* lab : {"g01", "g31", "g32"}) CHECK(g2.inner(*g2.index_of(lab), *g2.index_of(lab)) == 6);
  for (const char* lab : {"g10", "g11", "g21"}) CHECK(g2.inner(*g2.index_of(lab), *g2.index_of(lab)) == 2);
  CHECK(RootSystem::by_name("A2").size() == 3);
  CHECK(RootSystem::by_name("G2").size() == 6);
  CHECK_THROWS_AS(RootSystem::by_name("B2"), InputError);
}

TEST_CASE("characteristic classes follow the delta formula") {
  for (unsigned n = 2; n <= 6; ++n) {
    FlagA flag(n);
    auto classes = flag.char_classes();
    REQUIRE(classes.size() == n - 1);
    for (unsigned i = 1; i < n; ++i) {
      CHECK(classes[i - 1].linear_coefficients() == oracle::char_class(n, i));
      Rational sum = 0;
      for (const Rational& c : oracle::char_class(n, i)) sum += c;
      CHECK(trace_in_algebra(classes[i - 1], flag.all_ones()) == sum);
    }
  }
  FlagA f5(5);
  CHECK(f5.char_classes()[0].to_string() == "2 a12 + a13 + a14 + a15 - a23 - a24 - a25");
  CHECK(f5.index(2, 3) == 4);
  CHECK_THROWS_AS(f5.index(3, 3), InputError);
  CHECK_THROWS_AS(f5.omega_combo({1, 2}), InputError);
}

TEST_CASE("top intersection of linear factors is a permanent") {
  std::mt19937_64 rng(42);
  std::uniform_int_distribution<long> coef(-3, 3);
  for (unsigned n = 3; n <= 4; ++n) {
    FlagA flag(n);
    std::size_t m = flag.algebra().size();
    for (int t = 0; t < 10; ++t) {
      Matrix<Rational> a(m, std::vector<Rational>(m));
      std::vector<Element> factors;
      for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < m; ++j) a[i][j] = coef(rng);
        factors.push_back(Element::linear(flag.algebra(), a[i]));
      }
      CHECK(top_intersection(factors) == oracle::permanent(a));
    }
  }
  FlagA f3(3);
  std::vector<Element> short_list = {f3.all_ones()};
  CHECK_THROWS_AS(top_intersection(short_list), InputError);
}

TEST_CASE("traces against the all-ones form are coefficient sums") {
  std::mt19937_64 rng(8);
  std::uniform_int_distribution<long> coef(-5, 5);
  FlagA flag(5);
  for (int t = 0; t < 20; ++t) {
    std::vector<Rational> c(10);
    Rational sum = 0;
    for (auto& x : c) sum += (x = coef(rng));
    CHECK(trace_in_algebra(Element::linear(flag.algebra(), c), flag.all_ones()) == sum);
  }
  for (const Element& w : flag.char_classes()) CHECK(trace_in_algebra(w, flag.all_ones()) == 2);
  CHECK(trace_in_algebra(flag.omega_combo({1, 1, -1, -1}), flag.all_ones()) == 0);
  CHECK(trace_in_algebra(flag.omega_combo({3, -1, -1, -1}), flag.all_ones()) == 0);
  CHECK_THROWS_AS(trace_in_algebra(flag.all_ones(), flag.omega_combo({1, 1, 1, 1})), InputError);
}

TEST_CASE("positivity profiles") {
  FlagA flag(5);
  PositivityProfile w = positivity_profile(flag.omega_combo({1, 1, 1, 1}));
  CHECK(w.kind == PositivityProfile::Kind::weak);
  CHECK(w.zero_generators == std::vector<std::size_t>{flag.index(2, 3), flag.index(2, 4), flag.index(3, 4)});
  CHECK(positivity_profile(flag.omega_combo({3, 5, 6, 6})).kind == PositivityProfile::Kind::strict);
  CHECK(positivity_profile(flag.omega_combo({1, 1, -1, -1})).kind ==
        PositivityProfile::Kind::indefinite);
  PositivityProfile zero = positivity_profile(Element(flag.algebra()));
  CHECK(zero.kind == PositivityProfile::Kind::weak);
  CHECK(zero.zero_generators.size() == 10);
  CHECK(std::string(to_string(PositivityProfile::Kind::strict)) == "strict");
}

TEST_CASE("Kahler lambda additivity") {
  RootSystem a2 = RootSystem::type_a(3);
  CHECK(kahler_lambda_check(a2, {Rational(1), Rational(2), Rational(1)}));
  CHECK_FALSE(kahler_lambda_check(a2, {Rational(1), Rational(1), Rational(1)}));
  CHECK_THROWS_AS(kahler_lambda_check(a2, {Rational(1), Rational(0), Rational(1)}), InputError);
  std::map<std::string, Rational> named = {{"a12", 2}, {"a13", 5}, {"a23", 3}};
  CHECK(kahler_lambda_check(a2, named));
  named["a14"] = 1;
  CHECK_THROWS_AS(kahler_lambda_check(a2, named), InputError);
}

TEST_CASE("cone feasibility on the SU(5) classes") {
  FlagA flag(5);
  std::vector<Element> f12 = {flag.omega_combo({1, 1, -1, -1}), flag.omega_combo({3, -1, -1, -1})};
  ConeDecision cert = cone_feasibility(flag, f12);
  REQUIRE(cert.kind == ConeDecision::Kind::certificate);
  CHECK(cert.mu == std::vector<Rational>(10, Rational(1)));
  CHECK(cert.metric_lambda() == std::vector<Rational>(10, Rational(1)));

  ConeDecision wit = cone_feasibility(flag, flag.char_classes());
  REQUIRE(wit.kind == ConeDecision::Kind::witness);
  bool nonzero = false;
  for (const Rational& c : wit.combination) {
    CHECK(sgn(c) >= 0);
    nonzero = nonzero || sgn(c) > 0;
  }
  CHECK(nonzero);
  Element combo(flag.algebra());
  for (std::size_t i = 0; i < 4; ++i) combo += flag.char_classes()[i] * wit.t[i];
  CHECK(combo.linear_coefficients() == wit.combination);
  CHECK(wit.witness_additive.has_value());
  CHECK_THROWS_AS(wit.metric_lambda(), InputError);
}

TEST_CASE("cone feasibility matches the octant oracle") {
  std::mt19937_64 rng(2718);
  std::uniform_int_distribution<unsigned> size(3, 5), count(1, 4);
  std::uniform_int_distribution<long> coef(-3, 3);
  int certificates = 0, witnesses = 0;
  for (int t = 0; t < 80; ++t) {
    FlagA flag(size(rng));
    std::size_t m = flag.algebra().size();
    Matrix<Rational> rows;
    std::vector<Element> classes;
    for (unsigned c = count(rng); c > 0; --c) {
      std::vector<Rational> v(m);
      for (auto& x : v) x = coef(rng);
      rows.push_back(v);
      classes.push_back(Element::linear(flag.algebra(), v));
    }
    ConeDecision d = cone_feasibility(flag, classes);
    bool octant = oracle::span_meets_octant(rows, m);
    CHECK((d.kind == ConeDecision::Kind::witness) == octant);
    if (d.kind == ConeDecision::Kind::certificate) {
      ++certificates;
      for (const Rational& mu : d.mu) CHECK(sgn(mu) > 0);
      for (const auto& row : rows) {
        Rational dot = 0;
        for (std::size_t a = 0; a < m; ++a) dot += row[a] * d.mu[a];
        CHECK(dot == 0);
      }
    } else {
      ++witnesses;
    }
  }
  CHECK(certificates > 0);
  CHECK(witnesses > 0);
}

TEST_CASE("astheno scaling") {
  FlagA flag(5);
  Element f1 = flag.omega_combo({1, 1, -1, -1}), f2 = flag.omega_combo({3, -1, -1, -1});
  Element omega = flag.omega_combo({13, 15, 16, 16});
  Rational t2 = astheno_scaling(f1, f2, omega, 8);
  CHECK(sgn(t2) > 0);
  Element combo = f1 * f1 * t2 + f2 * f2;
  const Element factors[] = {combo, power(omega, 8)};
  CHECK(top_intersection(factors) == 0);
  CHECK_THROWS_AS(astheno_scaling(f1, f1, omega, 8), InputError);
  CHECK_THROWS_AS(astheno_scaling(Element(flag.algebra()), f2, omega, 8), InputError);
}

TEST_CASE("root pairing form vanishes against Kahler forms") {
  RootSystem a2 = RootSystem::type_a(3);
  Element q = root_pairing_form(a2);
  CHECK(q.to_string() == "2 a12 a13 - 2 a12 a23 + 2 a13 a23");
  // top(q F) is linear in lambda; it vanishes on a basis of additive lambdas.
  for (auto lambda : {std::vector<Rational>{1, 1, 0}, std::vector<Rational>{0, 1, 1}}) {
    const Element f[] = {q, Element::linear(q.algebra(), lambda)};
    CHECK(top_intersection(f) == 0);
  }
  const Element non_additive[] = {q, Element::linear(q.algebra(), {1, 1, 1})};
  CHECK(top_intersection(non_additive) != 0);

  RootSystem g2 = RootSystem::g2();
  Element qg = root_pairing_form(g2);
  // degree-4 form in (x, y) vanishing at five non-proportional points vanishes identically
  for (long x = 1; x <= 5; ++x) {
    std::vector<Rational> lambda;
    for (std::size_t a = 0; a < g2.size(); ++a)
      lambda.emplace_back(x * g2.coordinates(a)[0] + 7 * g2.coordinates(a)[1]);
    CHECK(kahler_lambda_check(g2, lambda));
    const Element f[] = {qg, power(Element::linear(qg.algebra(), lambda), 4)};
    CHECK(top_intersection(f) == 0);
  }
}
