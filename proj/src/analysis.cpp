#include "ccbl/analysis.hpp"

#include <sstream>

#include "ccbl/export.hpp"
#include "ccbl/syntax.hpp"

namespace ccbl {

Analysis analyze(const Formula& f, const BuildOptions& options) {
  Formula core = desugar_iff(f);
  DiscourseTree tree = build_discourse(core, options);
  Verdict verdict = classify(tree);
  return {f, std::move(core), std::move(tree), std::move(verdict)};
}

Analysis analyze(std::string_view text, const BuildOptions& options) {
  return analyze(parse(text), options);
}

std::string verdict_line(const Analysis& a) {
  std::ostringstream out;
  const Verdict& v = a.verdict;
  switch (v.modal) {
    case ModalClass::Tautology:
      out << "TAUTOLOGY (deductive proof, " << a.tree.stats.leaves
          << (a.tree.stats.leaves == 1 ? " leaf)" : " leaves)");
      break;
    case ModalClass::Contradiction:
      out << "CONTRADICTION (deconstruction)";
      break;
    case ModalClass::ContextualTruth:
      out << "CONTEXTUAL TRUTH; model " << render(*v.model) << "; counterexample "
          << render(*v.counterexample);
      break;
  }
  return out.str();
}

std::vector<BatchItem> read_batch(std::string_view content) {
  std::vector<BatchItem> items;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= content.size()) {
    std::size_t end = content.find('\n', pos);
    if (end == std::string_view::npos) end = content.size();
    std::string_view line = content.substr(pos, end - pos);
    ++line_no;
    std::size_t first = line.find_first_not_of(" \t\r");
    if (first != std::string_view::npos && line[first] != '#') {
      std::size_t last = line.find_last_not_of(" \t\r");
      items.push_back({line_no, std::string(line.substr(first, last - first + 1))});
    }
    if (end == content.size()) break;
    pos = end + 1;
  }
  return items;
}

std::vector<BatchResult> classify_batch(const std::vector<BatchItem>& items,
                                        const BuildOptions& options, int jobs) {
  std::vector<BatchResult> results(items.size());
  const auto n = static_cast<std::int64_t>(items.size());
#pragma omp parallel for schedule(dynamic) num_threads(jobs > 0 ? jobs : 1) if (jobs > 1)
  for (std::int64_t i = 0; i < n; ++i) {
    const auto& item = items[static_cast<std::size_t>(i)];
    BatchResult& r = results[static_cast<std::size_t>(i)];
    r.line = item.line;
    r.text = item.text;
    try {
      Analysis a = analyze(item.text, options);
      r.ok = true;
      r.modal = a.verdict.modal;
      r.report = verdict_line(a);
    } catch (const std::exception& e) {
      r.report = e.what();
    }
  }
  return results;
}

}  // namespace ccbl
