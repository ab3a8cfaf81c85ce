// Command line front end: check / dual / triple / hilbert / corpus over
// presentation documents. Exit codes: 0 = completed (any mathematical
// verdict), 2 = input error, 3 = resource bound exceeded.
#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <nlohmann/json.hpp>
#include <sstream>

#include "homkoszul/report.hpp"

using namespace homkoszul;

namespace {

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::InputError, "cannot open input file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void print_summary(const std::string& report_json) {
  auto j = nlohmann::json::parse(report_json);
  std::cout << "command: " << j["command"].get<std::string>() << "\n";
  for (const auto& r : j["results"]) {
    std::cout << "  " << r["name"].get<std::string>() << ": "
              << r["status"].get<std::string>() << "\n";
    if (r["name"] == "s_koszul_verdict" && r.contains("data") && r["data"].contains("witness")) {
      const auto& w = r["data"]["witness"];
      std::cout << "    witness at homological index " << w["hom_index"] << ", degree "
                << w["degree"] << "\n";
    }
    if (r["name"] == "bs_residual" && r.contains("data") &&
        r["data"].contains("first_nonzero") &&
        r["data"]["first_nonzero"].get<std::int64_t>() >= 0)
      std::cout << "    first nonzero at degree " << r["data"]["first_nonzero"] << "\n";
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact workbench for s-homogeneous algebras and their Koszul complexes"};
  app.require_subcommand(1);
  app.fallthrough();

  RunBounds bounds;
  RunOptions options;
  std::string field_flag;
  bool as_json = false;
  bool no_timing = false;
  app.add_option("--max-deg", bounds.max_deg, "internal degree bound (default 4s)");
  app.add_option("--hom-bound", bounds.hom_bound, "homological index bound (default 6)");
  app.add_option("--field", field_flag, "field override: QQ or GF:p");
  app.add_flag("--json", as_json, "print the full JSON report");
  app.add_flag("--no-timing", no_timing, "omit wall_ms so reruns are bit-identical");

  std::string input = "-";
  auto* check = app.add_subcommand("check", "s-Koszul verdict, ec, dc and the BS residual");
  check->add_option("input", input, "presentation document (JSON; - for stdin)");
  auto* dual = app.add_subcommand("dual", "the s-homogeneous dual presentation");
  dual->add_option("input", input, "presentation document");
  auto* triple = app.add_subcommand("triple", "F, axioms, splitting, summand witness, G");
  triple->add_option("input", input, "presentation document");
  triple->add_option("--trunc", bounds.triple_trunc, "triple truncation (default 3)");
  auto* hilb = app.add_subcommand("hilbert", "Hilbert series coefficients");
  hilb->add_option("input", input, "presentation document");
  hilb->add_option("--terms", bounds.terms, "number of coefficients (default 8)");
  auto* corpus = app.add_subcommand("corpus", "deterministic random presentations");
  corpus->add_option("--seed", options.seed, "generator seed");
  corpus->add_option("--count", options.count, "number of documents");
  corpus->add_option("--s-min", options.corpus_params.s_min, "minimum degree");
  corpus->add_option("--s-max", options.corpus_params.s_max, "maximum degree");
  corpus->add_option("--arrows-min", options.corpus_params.arrows_min, "minimum arrows");
  corpus->add_option("--arrows-max", options.corpus_params.arrows_max, "maximum arrows");
  corpus->add_option("--relations-min", options.corpus_params.relations_min, "minimum relations");
  corpus->add_option("--relations-max", options.corpus_params.relations_max, "maximum relations");
  corpus->add_option("--vertices", options.corpus_params.vertices, "vertex count");
  corpus->add_option("--monomial-bias", options.corpus_params.monomial_bias_percent,
                     "percent chance a relation is a single path");

  CLI11_PARSE(app, argc, argv);
  options.with_timing = !no_timing;
  try {
    if (!field_flag.empty()) options.field_override = FieldDesc::parse(field_flag);
    if (options.field_override && corpus->parsed())
      options.corpus_params.field = *options.field_override;
    std::string report;
    if (corpus->parsed()) {
      report = run_corpus_report(bounds, options);
    } else {
      std::string cmd = check->parsed()    ? "check"
                        : dual->parsed()   ? "dual"
                        : triple->parsed() ? "triple"
                                           : "hilbert";
      auto doc = PresentationDocument::parse(read_input(input));
      report = run_report(doc, cmd, bounds, options);
    }
    if (as_json)
      std::cout << report << "\n";
    else
      print_summary(report);
    return 0;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.kind == ErrorKind::ResourceLimit ? 3 : 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
