#include "hermcheck/corpus.hpp"

#include <algorithm>

#include "hermcheck/commands.hpp"

namespace hermcheck {

ReportSet run_corpus(const std::filesystem::path& dir, std::uint64_t seed) {
  if (!std::filesystem::is_directory(dir))
    throw InputError("corpus directory not found: " + dir.string());
  std::vector<std::filesystem::path> files;
  for (const auto& entry : std::filesystem::directory_iterator(dir))
    if (entry.is_regular_file() && entry.path().extension() == ".json") files.push_back(entry.path());
  std::sort(files.begin(), files.end());

  ReportSet out;
  for (const auto& file : files) {
    CheckReport r;
    r.command = "corpus";
    r.subject = file.filename().string();
    Manifest m;
    try {
      m = load_manifest(file);
    } catch (const InputError& e) {
      r.add("manifest", false, std::nullopt, std::string(e.what()));
      out.reports.push_back(std::move(r));
      continue;
    }
    if (m.expect.empty()) r.warnings.push_back("no expectations");
    for (const Expectation& e : m.expect) {
      std::string label;
      for (const auto& a : e.args) label += (label.empty() ? "" : " ") + a;
      CheckReport got;
      try {
        Invocation inv = parse_invocation(e.args, file.string());
        if (std::find(e.args.begin(), e.args.end(), "--seed") == e.args.end()) inv.seed = seed;
        got = run(inv, m, dir);
      } catch (const std::exception& ex) {
        r.add(label, false, std::nullopt, std::string(ex.what()));
        continue;
      }
      for (const std::string& w : got.warnings) r.warnings.push_back(label + ": " + w);
      for (const auto& [name, expected] : e.checks) {
        const Check* c = got.find(name);
        std::string check_name = label + " :: " + name;
        if (!c) {
          r.add(check_name, false, std::nullopt, "check not produced");
          continue;
        }
        bool is_status = expected == "pass" || expected == "fail" || expected == "undefined";
        std::string actual = is_status ? to_string(c->status) : c->value.value_or("");
        bool ok = actual == expected;
        r.add(check_name, ok, actual,
              ok ? std::nullopt : std::optional<std::string>("expected " + expected));
      }
    }
    out.reports.push_back(std::move(r));
  }
  return out;
}

}  // namespace hermcheck
