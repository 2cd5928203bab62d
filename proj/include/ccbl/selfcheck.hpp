#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ccbl/discourse.hpp"

namespace ccbl {

struct SelfcheckOptions {
  std::uint64_t seed = 0x5eed2010;
  std::size_t random_formulas = 1000;
  std::size_t audited_formulas = 100;
  /// Swapped in for the engine's expansion rules; empty means the real ones.
  Expander expander;
};

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0;
};

/// The fixture set behind `ccbl selfcheck`: schema soundness, completeness,
/// the Lukasiewicz discourse shape, the vocabulary and liar fixtures, oracle
/// agreement on random formulas, node equivalence, termination and
/// determinism.
std::vector<CriterionResult> run_selfcheck(const SelfcheckOptions& options = {});

}  // namespace ccbl
