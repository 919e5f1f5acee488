#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hermcheck/linalg.hpp"

namespace hermcheck {

/// Positive roots of a reduced root system, stored as coefficient vectors in
/// the simple roots, with the Killing-induced inner product given by the
/// Gram matrix of the simple roots.
class RootSystem {
 public:
  /// A_(N-1): roots r_jk = eps_j - eps_k (1 <= j < k <= N), labels "a12",
  /// ordered lexicographically in (j, k); every root has length^2 = 2.
  static RootSystem type_a(unsigned n);
  /// G2 with short simple root s and long simple root l (|s|^2 = 2,
  /// |l|^2 = 6); roots s, l, s+l, 2s+l, 3s+l, 3s+2l.
  static RootSystem g2();
  /// "A2", "A4", ... (rank suffix) or "G2".
  static RootSystem by_name(const std::string& name);

  const std::string& name() const { return name_; }
  std::size_t rank() const { return gram_.size(); }
  std::size_t size() const { return roots_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::vector<int>& coordinates(std::size_t a) const { return roots_.at(a); }
  std::optional<std::size_t> index_of(const std::string& label) const;

  Rational inner(std::size_t a, std::size_t b) const;
  /// Index of r_a + r_b when it is a positive root.
  std::optional<std::size_t> sum_index(std::size_t a, std::size_t b) const;

 private:
  std::string name_;
  Matrix<Rational> gram_;
  std::vector<std::vector<int>> roots_;
  std::vector<std::string> labels_;
};

}  // namespace hermcheck
