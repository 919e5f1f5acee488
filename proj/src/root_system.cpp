#include "hermcheck/root_system.hpp"

#include <algorithm>
#include <cctype>

namespace hermcheck {

RootSystem RootSystem::type_a(unsigned n) {
  if (n < 2) throw InputError("type A root system needs N >= 2");
  RootSystem rs;
  std::size_t r = n - 1;
  rs.name_ = "A" + std::to_string(r);
  rs.gram_.assign(r, std::vector<Rational>(r, Rational(0)));
  for (std::size_t i = 0; i < r; ++i) {
    rs.gram_[i][i] = 2;
    if (i + 1 < r) rs.gram_[i][i + 1] = rs.gram_[i + 1][i] = -1;
  }
  for (unsigned j = 1; j <= n; ++j)
    for (unsigned k = j + 1; k <= n; ++k) {
      std::vector<int> c(r, 0);
      for (unsigned i = j; i < k; ++i) c[i - 1] = 1;
      rs.roots_.push_back(std::move(c));
      rs.labels_.push_back(n > 9 ? "a" + std::to_string(j) + "_" + std::to_string(k)
                                 : "a" + std::to_string(j) + std::to_string(k));
    }
  return rs;
}

RootSystem RootSystem::g2() {
  RootSystem rs;
  rs.name_ = "G2";
  rs.gram_ = {{Rational(2), Rational(-3)}, {Rational(-3), Rational(6)}};
  rs.roots_ = {{1, 0}, {0, 1}, {1, 1}, {2, 1}, {3, 1}, {3, 2}};
  for (const auto& c : rs.roots_)
    rs.labels_.push_back("g" + std::to_string(c[0]) + std::to_string(c[1]));
  return rs;
}

RootSystem RootSystem::by_name(const std::string& name) {
  if (name == "G2" || name == "g2") return g2();
  if (name.size() >= 2 && (name[0] == 'A' || name[0] == 'a') &&
      std::all_of(name.begin() + 1, name.end(),
                  [](char ch) { return std::isdigit(static_cast<unsigned char>(ch)); }) &&
      name.size() <= 3) {
    unsigned rank = static_cast<unsigned>(std::stoul(name.substr(1)));
    if (rank >= 1) return type_a(rank + 1);
  }
  throw InputError("unsupported root system \"" + name + "\" (expected A<rank> or G2)");
}

std::optional<std::size_t> RootSystem::index_of(const std::string& label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - labels_.begin());
}

Rational RootSystem::inner(std::size_t a, std::size_t b) const {
  const auto& x = roots_.at(a);
  const auto& y = roots_.at(b);
  Rational out = 0;
  for (std::size_t i = 0; i < rank(); ++i)
    for (std::size_t j = 0; j < rank(); ++j)
      if (x[i] != 0 && y[j] != 0) out += gram_[i][j] * x[i] * y[j];
  return out;
}

std::optional<std::size_t> RootSystem::sum_index(std::size_t a, std::size_t b) const {
  std::vector<int> s = roots_.at(a);
  for (std::size_t i = 0; i < s.size(); ++i) s[i] += roots_.at(b)[i];
  auto it = std::find(roots_.begin(), roots_.end(), s);
  if (it == roots_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - roots_.begin());
}

}  // namespace hermcheck
