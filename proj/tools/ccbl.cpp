// ccbl: classify propositional formulas through full deductive discourses.
//
//   ccbl classify "p -> (q -> p)"           exit 0 tautology, 1 contextual, 2 contradiction
//   ccbl tree "p | ~p" --format dot
//   ccbl cnf "p & ~p" --dimacs
//   ccbl selfcheck [--json]
//   ccbl batch formulas.txt --jobs 4
//
// CBL_MAX_NODES overrides the discourse node limit.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "ccbl/analysis.hpp"
#include "ccbl/ccnf.hpp"
#include "ccbl/export.hpp"
#include "ccbl/selfcheck.hpp"
#include "ccbl/syntax.hpp"

namespace {

constexpr int kExitTautology = 0;
constexpr int kExitContextual = 1;
constexpr int kExitContradiction = 2;
constexpr int kExitBatchErrors = 65;
constexpr int kExitUsage = 64;
constexpr int kExitNoInput = 66;
constexpr int kExitLimit = 70;  // also any other internal failure

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

ccbl::BuildOptions build_options(bool early_closure) {
  ccbl::BuildOptions options;
  options.early_closure = early_closure;
  if (const char* env = std::getenv("CBL_MAX_NODES")) {
    try {
      options.max_nodes = std::stoull(env);
    } catch (const std::exception&) {
      throw InputError(std::string("invalid CBL_MAX_NODES: ") + env);
    }
  }
  return options;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// The formula argument, or the single formula line of --file.
std::string formula_text(const std::string& formula, const std::string& file) {
  if (file.empty()) return formula;
  auto items = ccbl::read_batch(read_file(file));
  if (items.size() != 1) throw ccbl::SyntaxError(0, "exactly one formula in " + file);
  return items.front().text;
}

int exit_code(ccbl::ModalClass c) {
  switch (c) {
    case ccbl::ModalClass::Tautology: return kExitTautology;
    case ccbl::ModalClass::ContextualTruth: return kExitContextual;
    case ccbl::ModalClass::Contradiction: return kExitContradiction;
  }
  return kExitUsage;
}

void report_syntax_error(const std::string& text, const ccbl::SyntaxError& e) {
  std::cerr << "error: " << e.what() << '\n';
  if (!text.empty() && text.find('\n') == std::string::npos)
    std::cerr << "  " << text << "\n  " << std::string(e.position(), ' ') << "^\n";
}

// Runs `body`, mapping the shared failure modes onto exit codes.
template <typename Body>
int guarded(const std::string& text, Body&& body) {
  try {
    return body();
  } catch (const ccbl::SyntaxError& e) {
    report_syntax_error(text, e);
    return kExitUsage;
  } catch (const ccbl::LimitExceeded& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitLimit;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitNoInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitLimit;
  }
}

int cmd_classify(const std::string& text, bool json, bool early_closure) {
  auto a = ccbl::analyze(text, build_options(early_closure));
  if (json) {
    ccbl::Json out{{"formula", ccbl::render(a.input)}, {"verdict", ccbl::to_json(a.verdict)}};
    out["stats"] = {{"nodes", a.tree.stats.nodes},
                    {"depth", a.tree.stats.depth},
                    {"leaves", a.tree.stats.leaves}};
    std::cout << out.dump(2) << '\n';
  } else {
    std::cout << ccbl::verdict_line(a) << '\n';
    std::cout << "formula: " << ccbl::render(a.input) << '\n';
    if (a.verdict.modal == ccbl::ModalClass::Contradiction)
      std::cout << "reason: " << ccbl::to_string(a.verdict.deconstruction) << '\n';
    std::cout << "tree: " << a.tree.stats.nodes << " nodes, depth " << a.tree.stats.depth << ", "
              << a.tree.stats.leaves << " leaves\n";
  }
  return exit_code(a.verdict.modal);
}

int cmd_tree(const std::string& text, const std::string& format, bool with_transcript,
             bool early_closure) {
  auto a = ccbl::analyze(text, build_options(early_closure));
  if (format == "json")
    std::cout << ccbl::to_json(a.tree).dump(2) << '\n';
  else if (format == "dot")
    std::cout << ccbl::to_dot(a.tree);
  else
    std::cout << ccbl::to_text(a.tree);
  if (with_transcript) std::cout << ccbl::render_transcript(ccbl::transcript(a.tree));
  return 0;
}

int cmd_cnf(const std::string& text, const std::string& mode, bool prune) {
  auto a = ccbl::analyze(text, build_options(false));
  auto c = ccbl::ccnf_of(a.tree);
  if (mode == "dimacs")
    std::cout << ccbl::export_dimacs(c, prune);
  else if (mode == "json")
    std::cout << ccbl::to_json(c).dump(2) << '\n';
  else
    std::cout << ccbl::render_summary(c) << '\n';
  return 0;
}

int cmd_selfcheck(bool json) {
  auto results = ccbl::run_selfcheck();
  bool all = true;
  ccbl::Json out = ccbl::Json::array();
  ccbl::Json schema = ccbl::to_json(ccbl::check_schemas());
  for (const auto& r : results) {
    all = all && r.passed;
    if (json) {
      out.push_back({{"id", r.id},
                     {"name", r.name},
                     {"passed", r.passed},
                     {"detail", r.detail},
                     {"seconds", r.seconds}});
    } else {
      std::cout << (r.passed ? "PASS" : "FAIL") << "  " << r.id << ". " << r.name;
      if (!r.detail.empty()) std::cout << " -- " << r.detail;
      std::cout << '\n';
    }
  }
  if (json)
    std::cout << ccbl::Json{{"passed", all}, {"criteria", out}, {"schemas", schema}}.dump(2) << '\n';
  return all ? 0 : 1;
}

int cmd_batch(const std::string& file, int jobs, bool early_closure) {
  auto items = ccbl::read_batch(read_file(file));
  auto results = ccbl::classify_batch(items, build_options(early_closure), jobs);
  bool errors = false;
  for (const auto& r : results) {
    std::cout << r.line << ": " << (r.ok ? r.report : "ERROR " + r.report) << '\n';
    errors = errors || !r.ok;
  }
  return errors ? kExitBatchErrors : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Deductive discourses, CCNF and truth-table checks for propositional formulas"};
  app.require_subcommand(1);

  std::string formula, file, format = "text";
  bool json = false, early = false, transcript = false, prune = false;
  bool dimacs = false, summary = false;
  int jobs = 1;

  auto* classify = app.add_subcommand("classify", "Classify a formula");
  classify->add_option("formula", formula, "Formula text");
  classify->add_option("--file", file, "File holding one formula");
  classify->add_flag("--json", json, "JSON report");
  classify->add_flag("--early-closure", early, "Close nodes at the first TND match");

  auto* tree = app.add_subcommand("tree", "Print the full discourse");
  tree->add_option("formula", formula, "Formula text")->required();
  tree->add_option("--format", format, "text, dot or json")
      ->check(CLI::IsMember({"text", "dot", "json"}));
  tree->add_flag("--transcript", transcript, "Append the bottom-up transcript");
  tree->add_flag("--early-closure", early, "Close nodes at the first TND match");

  auto* cnf = app.add_subcommand("cnf", "Print the CCNF of a formula");
  cnf->add_option("formula", formula, "Formula text")->required();
  auto* dimacs_flag = cnf->add_flag("--dimacs", dimacs, "DIMACS CNF");
  auto* summary_flag = cnf->add_flag("--summary", summary, "Summary equivalence (default)");
  auto* json_flag = cnf->add_flag("--json", json, "JSON clause listing");
  dimacs_flag->excludes(summary_flag)->excludes(json_flag);
  summary_flag->excludes(json_flag);
  cnf->add_flag("--prune-tautologies", prune, "Leave tautological clauses out of DIMACS");

  auto* selfcheck = app.add_subcommand("selfcheck", "Run the built-in fixture set");
  selfcheck->add_flag("--json", json, "JSON report");

  auto* batch = app.add_subcommand("batch", "Classify one formula per line");
  batch->add_option("file", file, "Input file")->required();
  batch->add_option("--jobs", jobs, "Parallel workers")->check(CLI::PositiveNumber);
  batch->add_flag("--early-closure", early, "Close nodes at the first TND match");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  if (*classify) {
    if (formula.empty() == file.empty()) {
      std::cerr << "error: give either a formula or --file\n";
      return kExitUsage;
    }
    std::string text = formula;
    return guarded(text, [&] {
      text = formula_text(formula, file);
      return cmd_classify(text, json, early);
    });
  }
  if (*tree) return guarded(formula, [&] { return cmd_tree(formula, format, transcript, early); });
  if (*cnf) {
    std::string mode = dimacs ? "dimacs" : json ? "json" : "summary";
    return guarded(formula, [&] { return cmd_cnf(formula, mode, prune); });
  }
  if (*selfcheck) return cmd_selfcheck(json);
  if (*batch) return guarded("", [&] { return cmd_batch(file, jobs, early); });
  return kExitUsage;
}
