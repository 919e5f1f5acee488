#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "hermcheck/manifest.hpp"
#include "hermcheck/report.hpp"

namespace CLI {
class App;
}

namespace hermcheck {

/// Wrong command/flag combination or a manifest of the wrong kind (exit 2).
class UsageError : public InputError {
 public:
  using InputError::InputError;
};

/// One checking command with its options, as parsed from the command line
/// or from a corpus expectation.
struct Invocation {
  std::string command;  // check-algebra | classify | bundle | flag | quad
  std::string file;
  std::optional<std::string> metric;
  bool verify_prop31 = false;
  std::optional<unsigned> k;
  bool matsuo = false;
  bool traces = false;
  bool char_classes = false;
  std::optional<std::string> against;
  std::optional<std::string> positivity;
  std::vector<std::string> cone;
  std::vector<std::string> astheno_scaling;  // F1 F2 OMEGA P
  std::optional<std::string> root_pairing;
  std::optional<std::string> rank_file;
  std::optional<unsigned> invariants;
  std::uint64_t seed = 0;
};

/// Registers the checking subcommands on `app`, binding them to `inv`.
/// `inv.command` is filled by parse_invocation or by the caller after parse.
void register_commands(CLI::App& app, Invocation& inv);

/// Parses {command, options...}; `file` is inserted as the command's FILE
/// argument where the command takes one. Throws UsageError.
Invocation parse_invocation(const std::vector<std::string>& args, const std::string& file);

/// Runs an invocation. Manifests are loaded from inv.file; relative
/// --rank paths resolve against `base_dir`. Throws UsageError/InputError.
CheckReport run(const Invocation& inv, const std::filesystem::path& base_dir = {});
CheckReport run(const Invocation& inv, const Manifest& m, const std::filesystem::path& base_dir = {});

}  // namespace hermcheck
