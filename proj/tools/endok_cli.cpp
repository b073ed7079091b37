#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "endok/endok.hpp"

int main(int argc, char** argv) {
  CLI::App app{"endok: certify K-group decomposition hypotheses for finite-dimensional algebras"};
  app.set_version_flag("--version", std::string(endok::kToolVersion));

  endok::RunOptions opt;
  std::string command, format = "human";
  std::vector<std::string> files;
  bool seed_given = false;

  app.add_option("command", command, "analyze | k0 | check-ideal | check-covariant | tor | stratify | verify | construct | corpus")
      ->required()
      ->check(CLI::IsMember(endok::command_names()));
  app.add_option("files", files, "input documents (.alg), or the corpus directory")->required();
  app.add_option("--bound", opt.bound, "resolution bound (default 2 dim A)");
  app.add_option("--tor-bound", opt.tor_bound, "Tor degree bound")->capture_default_str();
  app.add_option("--retries", opt.retries, "randomized search retries")->capture_default_str();
  app.add_option("--budget", opt.budget, "stratification search nodes")->capture_default_str();
  app.add_option("--seed", opt.seed, "random seed (falls back to ENDOK_SEED, then 0)")
      ->each([&](const std::string&) { seed_given = true; });
  app.add_option("--algebra", opt.algebra, "algebra to analyze (default: the document default)");
  app.add_option("--compare", opt.compare, "analyze: algebra to test for isomorphism");
  app.add_option("--e", opt.e, "idempotent element");
  app.add_option("--ideal", opt.ideal, "ideal");
  app.add_option("--morphism", opt.morphism, "module homomorphism");
  app.add_option("--thm", opt.thm, "theorem id, e.g. 1.1, 1.2, 3.8, 4.1, 4.3, 4.4, 4.7, 4.8, 4.10");
  app.add_option("--format", format, "report format")->check(CLI::IsMember({"human", "machine"}))->capture_default_str();
  app.add_flag("--timing", opt.timing, "append wall-clock timing to the report");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : endok::kInputError;
  }
  if (!seed_given) {
    if (const char* s = std::getenv("ENDOK_SEED")) {
      try {
        opt.seed = std::stoull(s);
      } catch (const std::exception&) {
        std::cerr << "ENDOK_SEED is not a nonnegative integer: " << s << "\n";
        return endok::kInputError;
      }
    }
  }

  endok::Report report;
  if (command == "corpus") {
    if (files.size() != 1) {
      std::cerr << "corpus takes one directory or expectations file\n";
      return endok::kInputError;
    }
    report = endok::run_corpus(files.front(), opt);
  } else {
    report = endok::run(command, files, opt);
  }
  if (command == "construct" && format == "human" && report.exit_code == endok::kOk) {
    for (const auto& r : report.records)
      if (r.contains("document")) std::cout << r["document"].dump(2) << "\n";
    return report.exit_code;
  }
  std::cout << endok::emit_report(report, format);
  return report.exit_code;
}
