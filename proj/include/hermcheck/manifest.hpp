#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hermcheck/lie.hpp"
#include "hermcheck/serialize.hpp"

namespace hermcheck {

/// Malformed manifest. The message leads with a JSON pointer ("/metrics/F1")
/// or a "line L, column C" position.
class ManifestError : public InputError {
 public:
  using InputError::InputError;
};

template <class T>
using Named = std::vector<std::pair<std::string, T>>;

/// Lie algebra payload: differentials, complex structure pairs and named
/// fundamental forms. Indices are 0-based in memory, 1-based on disk.
struct LieAlgebraPayload {
  LieAlgebraSpec spec;
  std::vector<std::pair<std::size_t, std::size_t>> pairs;  // empty: no structure
  Named<Form> metrics;

  friend bool operator==(const LieAlgebraPayload&, const LieAlgebraPayload&) = default;
};

/// Truncated-ring description: generator names and nilpotency orders.
struct RingPayload {
  std::vector<std::string> names;
  std::vector<unsigned> orders;

  friend bool operator==(const RingPayload&, const RingPayload&) = default;
};

/// A degree-2 class given by omega coordinates (flag_A) or by generator
/// coefficients keyed by generator label.
struct ClassDef {
  std::optional<std::vector<Rational>> omega_combo;
  std::map<std::string, Rational> coeffs;

  friend bool operator==(const ClassDef&, const ClassDef&) = default;
};

/// Bundle over either a Lie-algebra model (forms) or a truncated ring
/// (classes). Curvatures and metrics live on the base.
struct BundlePayload {
  std::optional<LieAlgebraPayload> lie_base;
  std::optional<RingPayload> ring_base;
  std::vector<Form> curvatures;            // lie base
  Named<Form> metrics;                     // lie base
  std::vector<ClassDef> ring_curvatures;   // ring base
  Named<ClassDef> ring_metrics;            // ring base

  friend bool operator==(const BundlePayload&, const BundlePayload&) = default;
};

struct FlagPayload {
  unsigned n = 0;
  Named<ClassDef> classes;

  friend bool operator==(const FlagPayload&, const FlagPayload&) = default;
};

struct InvariantAlgebraPayload {
  std::optional<std::string> root_system;
  std::optional<RingPayload> ring;
  Named<ClassDef> classes;
  unsigned samples = 100;

  friend bool operator==(const InvariantAlgebraPayload&, const InvariantAlgebraPayload&) = default;
};

/// One corpus expectation: command arguments (after the file) and the
/// expected status ("pass", "fail", "undefined") or exact value per check.
struct Expectation {
  std::vector<std::string> args;
  Named<std::string> checks;

  friend bool operator==(const Expectation&, const Expectation&) = default;
};

struct Manifest {
  std::string kind;  // lie_algebra | flag_A | bundle | invariant_algebra
  std::string name;
  std::string description;
  std::optional<LieAlgebraPayload> lie;
  std::optional<BundlePayload> bundle;
  std::optional<FlagPayload> flag;
  std::optional<InvariantAlgebraPayload> invariant;
  std::vector<Expectation> expect;

  friend bool operator==(const Manifest&, const Manifest&) = default;
};

/// Parses and validates manifest text. A bundle "base" given as a string is
/// resolved as <base_dir>/<name>.json (a lie_algebra manifest).
Manifest parse_manifest(const std::string& text,
                        const std::filesystem::path& base_dir = {});
Manifest load_manifest(const std::filesystem::path& file);
json serialize_manifest(const Manifest& m);

}  // namespace hermcheck
