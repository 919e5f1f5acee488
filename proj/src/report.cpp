#include "hermcheck/report.hpp"

#include <sstream>

namespace hermcheck {

const char* to_string(Status s) {
  switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    default: return "undefined";
  }
}

Status status_from_string(const std::string& s) {
  if (s == "pass") return Status::pass;
  if (s == "fail") return Status::fail;
  if (s == "undefined") return Status::undefined;
  throw InputError("unknown status \"" + s + "\"");
}

Check& CheckReport::add(std::string name, bool ok, std::optional<std::string> value,
                        std::optional<std::string> witness) {
  checks.push_back({std::move(name), ok ? Status::pass : Status::fail, std::move(value),
                    std::move(witness)});
  return checks.back();
}

Check& CheckReport::add_value(std::string name, std::string value) {
  return add(std::move(name), true, std::move(value));
}

Check& CheckReport::add_undefined(std::string name, std::string reason) {
  checks.push_back({std::move(name), Status::undefined, std::move(reason), std::nullopt});
  return checks.back();
}

const Check* CheckReport::find(const std::string& name) const {
  for (const Check& c : checks)
    if (c.name == name) return &c;
  return nullptr;
}

bool CheckReport::failed() const {
  for (const Check& c : checks)
    if (c.status == Status::fail) return true;
  return false;
}

json CheckReport::to_json() const {
  json out = json::object();
  out["command"] = command;
  out["subject"] = subject;
  out["status"] = failed() ? "fail" : "pass";
  json list = json::array();
  for (const Check& c : checks) {
    json item = {{"name", c.name}, {"status", to_string(c.status)}};
    if (c.value) item["value"] = *c.value;
    if (c.witness) item["witness"] = *c.witness;
    list.push_back(std::move(item));
  }
  out["checks"] = std::move(list);
  if (!warnings.empty()) out["warnings"] = warnings;
  return out;
}

CheckReport CheckReport::from_json(const json& j) {
  CheckReport r;
  r.command = j.at("command").get<std::string>();
  r.subject = j.at("subject").get<std::string>();
  for (const auto& item : j.at("checks")) {
    Check c;
    c.name = item.at("name").get<std::string>();
    c.status = status_from_string(item.at("status").get<std::string>());
    if (item.contains("value")) c.value = item["value"].get<std::string>();
    if (item.contains("witness")) c.witness = item["witness"].get<std::string>();
    r.checks.push_back(std::move(c));
  }
  if (j.contains("warnings")) r.warnings = j["warnings"].get<std::vector<std::string>>();
  return r;
}

std::string CheckReport::to_text() const {
  std::ostringstream out;
  out << command << " " << subject << ": " << (failed() ? "FAIL" : "PASS") << "\n";
  for (const Check& c : checks) {
    out << "  [" << to_string(c.status) << "] " << c.name;
    if (c.value) out << " = " << *c.value;
    out << "\n";
    if (c.witness) out << "      witness: " << *c.witness << "\n";
  }
  for (const std::string& w : warnings) out << "  warning: " << w << "\n";
  return out.str();
}

bool ReportSet::failed() const {
  for (const CheckReport& r : reports)
    if (r.failed()) return true;
  return false;
}

json ReportSet::to_json() const {
  json list = json::array();
  for (const CheckReport& r : reports) list.push_back(r.to_json());
  return {{"status", failed() ? "fail" : "pass"}, {"reports", std::move(list)}};
}

ReportSet ReportSet::from_json(const json& j) {
  ReportSet s;
  for (const auto& r : j.at("reports")) s.reports.push_back(CheckReport::from_json(r));
  return s;
}

std::string ReportSet::to_text() const {
  std::string out;
  std::size_t failures = 0;
  for (const CheckReport& r : reports) {
    out += r.to_text();
    if (r.failed()) ++failures;
  }
  out += std::to_string(reports.size() - failures) + "/" + std::to_string(reports.size()) +
         " reports pass\n";
  return out;
}

}  // namespace hermcheck
