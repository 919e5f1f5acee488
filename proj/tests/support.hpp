#pragma once

#include <filesystem>
#include <random>
#include <string>

#include "hermcheck/complex_structure.hpp"
#include "hermcheck/manifest.hpp"

namespace hermcheck::test {

inline std::filesystem::path corpus_dir() { return HERMCHECK_CORPUS_DIR; }

inline LieAlgebraPayload lie_payload(const std::string& name) {
  Manifest m = load_manifest(corpus_dir() / (name + ".json"));
  return *m.lie;
}

inline ComplexLieAlgebra complex_model(const LieAlgebraPayload& p) {
  return ComplexLieAlgebra::make(LieAlgebra::from_spec(p.spec),
                                 AlmostComplexStructure::from_pairs(p.spec.dim, p.pairs));
}

inline ComplexLieAlgebra complex_model(const std::string& name) {
  return complex_model(lie_payload(name));
}

inline Form named_metric(const LieAlgebraPayload& p, const std::string& name) {
  for (const auto& [n, f] : p.metrics)
    if (n == name) return f;
  throw std::out_of_range("no metric " + name);
}

/// Small Gaussian rational, numerator and denominator bounded.
inline Scalar random_scalar(std::mt19937_64& rng, bool real = false) {
  std::uniform_int_distribution<long> num(-4, 4), den(1, 3);
  Scalar re = Scalar(Rational(num(rng), den(rng)));
  if (real) return re;
  std::bernoulli_distribution complex(0.3);
  if (!complex(rng)) return re;
  return re + Scalar::i() * Scalar(num(rng));
}

/// Random homogeneous form of degree k with up to `terms` monomials.
inline Form random_form(std::mt19937_64& rng, std::size_t dim, int k, int terms = 4,
                        bool real = false) {
  Form f(dim);
  std::uniform_int_distribution<std::size_t> idx(0, dim - 1);
  for (int t = 0; t < terms; ++t) {
    std::uint64_t bits = 0;
    while (std::popcount(bits) < k) bits |= std::uint64_t{1} << idx(rng);
    f.add_term(Monomial(bits), random_scalar(rng, real));
  }
  return f;
}

/// e^{i1 ... ik} from increasing 1-based indices.
inline Form e(std::size_t dim, std::initializer_list<std::size_t> one_based, const Scalar& c = 1) {
  std::uint64_t bits = 0;
  for (std::size_t i : one_based) bits |= std::uint64_t{1} << (i - 1);
  return Form::monomial(dim, Monomial(bits), c);
}

inline ComplexLieAlgebra flat(std::size_t dim) {
  return ComplexLieAlgebra::make(LieAlgebra::abelian(dim), AlmostComplexStructure::standard(dim));
}

/// sum_k lambda_k e^{2k-1} ^ e^{2k}
inline Form diagonal(std::size_t dim, const std::vector<long>& lambda) {
  Form f(dim);
  for (std::size_t k = 0; k < lambda.size(); ++k) f += e(dim, {2 * k + 1, 2 * k + 2}, lambda[k]);
  return f;
}

/// Random real (1,1)-form for the standard structure, integer coefficients in [-2, 2].
inline Form random_11(std::mt19937_64& rng, std::size_t dim) {
  std::uniform_int_distribution<long> c(-2, 2);
  Form f(dim);
  std::size_t n = dim / 2;
  for (std::size_t k = 1; k <= n; ++k) {
    f += e(dim, {2 * k - 1, 2 * k}, c(rng));
    for (std::size_t l = k + 1; l <= n; ++l) {
      f += (e(dim, {2 * k - 1, 2 * l - 1}) + e(dim, {2 * k, 2 * l})) * Scalar(c(rng));
      f += (e(dim, {2 * k - 1, 2 * l}) - e(dim, {2 * k, 2 * l - 1})) * Scalar(c(rng));
    }
  }
  return f;
}

}  // namespace hermcheck::test
