#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hermcheck/serialize.hpp"

namespace hermcheck {

enum class Status { pass, fail, undefined };

const char* to_string(Status s);
Status status_from_string(const std::string& s);

struct Check {
  std::string name;
  Status status = Status::pass;
  std::optional<std::string> value;    // exact rendering
  std::optional<std::string> witness;  // nonzero form explaining a failure

  friend bool operator==(const Check&, const Check&) = default;
};

/// Ordered checks for one command on one subject. The report fails iff some
/// check fails; undefined checks do not fail it.
struct CheckReport {
  std::string command;
  std::string subject;
  std::vector<Check> checks;
  std::vector<std::string> warnings;

  Check& add(std::string name, bool ok, std::optional<std::string> value = std::nullopt,
             std::optional<std::string> witness = std::nullopt);
  Check& add_value(std::string name, std::string value);
  Check& add_undefined(std::string name, std::string reason);
  const Check* find(const std::string& name) const;
  bool failed() const;

  json to_json() const;
  static CheckReport from_json(const json& j);
  /// Human rendering of the same value.
  std::string to_text() const;

  friend bool operator==(const CheckReport&, const CheckReport&) = default;
};

/// Reports of several commands (a corpus run) with a combined status.
struct ReportSet {
  std::vector<CheckReport> reports;

  bool failed() const;
  json to_json() const;
  static ReportSet from_json(const json& j);
  std::string to_text() const;

  friend bool operator==(const ReportSet&, const ReportSet&) = default;
};

}  // namespace hermcheck
