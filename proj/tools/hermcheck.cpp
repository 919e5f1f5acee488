// hermcheck: exact checks for invariant Hermitian metrics.
//
// Exit status: 0 when every check passes, 1 when any check fails, 2 on
// usage or input errors.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "hermcheck/commands.hpp"
#include "hermcheck/corpus.hpp"

namespace {

int emit(const std::string& text, const std::string& out_file) {
  if (out_file.empty()) {
    std::cout << text;
    return 0;
  }
  std::ofstream out(out_file);
  if (!out) {
    std::cerr << "hermcheck: cannot write " << out_file << "\n";
    return 2;
  }
  out << text;
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact checks for invariant Hermitian metrics"};
  app.require_subcommand(1);
  bool as_json = false;
  std::string out_file;
  app.add_flag("--json", as_json, "Machine-readable report");
  app.add_option("--out", out_file, "Write the report to a file");

  hermcheck::Invocation inv;
  hermcheck::register_commands(app, inv);

  auto* corpus = app.add_subcommand("corpus", "Frozen example corpus");
  corpus->require_subcommand(1);
  auto* corpus_run = corpus->add_subcommand("run", "Check every corpus expectation");
  std::uint64_t corpus_seed = 0;
  std::string corpus_dir = HERMCHECK_CORPUS_DIR;
  corpus_run->add_option("--seed", corpus_seed, "Seed for randomized checks");
  corpus_run->add_option("--dir", corpus_dir, "Corpus directory");
  // global --json / --out may follow the subcommand
  for (auto* sub : app.get_subcommands({})) sub->fallthrough();
  corpus_run->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (corpus_run->parsed()) {
      hermcheck::ReportSet reports = hermcheck::run_corpus(corpus_dir, corpus_seed);
      std::string text = as_json ? reports.to_json().dump(2) + "\n" : reports.to_text();
      if (int rc = emit(text, out_file)) return rc;
      return reports.failed() ? 1 : 0;
    }
    inv.command = app.get_subcommands().front()->get_name();
    hermcheck::CheckReport report = hermcheck::run(inv);
    std::string text = as_json ? report.to_json().dump(2) + "\n" : report.to_text();
    if (int rc = emit(text, out_file)) return rc;
    return report.failed() ? 1 : 0;
  } catch (const std::invalid_argument& e) {
    std::cerr << "hermcheck: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "hermcheck: " << e.what() << "\n";
    return 2;
  }
}
