#include <doctest.h>

#include "hermcheck/metric.hpp"
#include "support.hpp"

using namespace hermcheck;

namespace {

using M3 = Matrix<Scalar>;

M3 zero3() { return M3(3, std::vector<Scalar>(3)); }

M3 unit(std::size_t j, std::size_t k) {
  M3 m = zero3();
  m[j][k] = 1;
  return m;
}

M3 combine(const M3& a, const Scalar& x, const M3& b, const Scalar& y) {
  M3 out = zero3();
  for (std::size_t r = 0; r < 3; ++r)
    for (std::size_t c = 0; c < 3; ++c) out[r][c] = a[r][c] * x + b[r][c] * y;
  return out;
}

M3 diag(const Scalar& a, const Scalar& b, const Scalar& c) {
  M3 m = zero3();
  m[0][0] = a;
  m[1][1] = b;
  m[2][2] = c;
  return m;
}

Scalar inner(const M3& a, const M3& b) {
  M3 p = multiply(a, b);
  return (p[0][0] + p[1][1] + p[2][2]) * Scalar(Rational(-1, 2));
}

// X_jk, Y_jk for (1,2), (1,3), (2,3), then T1, T2.
std::vector<M3> su3_basis() {
  std::vector<M3> out;
  const Scalar i = Scalar::i();
  for (auto [j, k] : {std::pair{0, 1}, std::pair{0, 2}, std::pair{1, 2}}) {
    out.push_back(combine(unit(j, k), 1, unit(k, j), -1));
    out.push_back(combine(unit(j, k), i, unit(k, j), i));
  }
  out.push_back(diag(i, -i, 0));
  Scalar s = i * Scalar::sqrt3() * Scalar(Rational(1, 3));
  out.push_back(diag(s, s, s * Scalar(-2)));
  return out;
}

}  // namespace

TEST_CASE("the shipped su(3) model matches the matrix construction") {
  auto e = su3_basis();
  std::size_t n = e.size();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) CHECK(inner(e[a], e[b]) == Scalar(a == b ? 1 : 0));

  LieAlgebraSpec spec = LieAlgebraSpec::abelian(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      M3 br = combine(multiply(e[i], e[j]), 1, multiply(e[j], e[i]), -1);
      for (std::size_t k = 0; k < n; ++k) {
        Scalar c = inner(br, e[k]);
        spec.d1[k] += test::e(n, {i + 1, j + 1}, -c);
      }
    }
  CHECK(validate(spec).ok);
  CHECK(spec == test::lie_payload("su3_group").spec);
}

TEST_CASE("su(3) metrics") {
  auto p = test::lie_payload("su3_group");
  ComplexLieAlgebra m = test::complex_model(p);
  MetricReport bi = classify(HermitianCandidate::make(m, test::named_metric(p, "Omega1")));
  CHECK(bi.skt);
  CHECK_FALSE(bi.astheno.value());
  CHECK_FALSE(bi.kahler);
  MetricReport flag = classify(HermitianCandidate::make(m, test::named_metric(p, "Omega2")));
  CHECK(flag.astheno.value());
  CHECK_FALSE(flag.skt);
  CHECK_FALSE(flag.kahler);
}
