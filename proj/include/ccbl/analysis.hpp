#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "ccbl/discourse.hpp"

namespace ccbl {

struct Analysis {
  Formula input;
  /// input with <-> desugared; the discourse root.
  Formula formula;
  DiscourseTree tree;
  Verdict verdict;
};

/// parse, desugar_iff, build_discourse, classify. Lets SyntaxError and
/// LimitExceeded through.
Analysis analyze(std::string_view text, const BuildOptions& options = {});
Analysis analyze(const Formula& f, const BuildOptions& options = {});

/// One-line verdict, e.g. `TAUTOLOGY (deductive proof, 3 leaves)` or
/// `CONTEXTUAL TRUTH; model p=0; counterexample p=1 q=0`.
std::string verdict_line(const Analysis& a);

struct BatchItem {
  std::size_t line = 0;  // 1-based line in the input
  std::string text;
};

struct BatchResult {
  std::size_t line = 0;
  std::string text;
  bool ok = false;
  ModalClass modal = ModalClass::ContextualTruth;
  /// verdict_line on success, the error message otherwise.
  std::string report;
};

/// Non-empty lines whose first non-blank character is not `#`.
std::vector<BatchItem> read_batch(std::string_view content);

/// Classifies independent formulas, `jobs` at a time on OpenMP threads.
/// Results come back in input order whatever `jobs` is.
std::vector<BatchResult> classify_batch(const std::vector<BatchItem>& items,
                                        const BuildOptions& options, int jobs);

}  // namespace ccbl
