#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "ccbl/formula.hpp"

namespace ccbl {

struct RandomFormulaOptions {
  std::size_t variables = 4;
  std::size_t max_depth = 6;
  bool allow_iff = false;
  /// Percent chance that a leaf position is t or f instead of a variable.
  unsigned constant_percent = 10;
  /// Percent chance to stop early at an inner position.
  unsigned leaf_percent = 25;
};

/// Deterministic for a given seed: draws come straight from mt19937_64 with
/// modular reduction, never from the implementation-defined distributions.
class RandomFormulaGenerator {
 public:
  explicit RandomFormulaGenerator(std::uint64_t seed, RandomFormulaOptions options = {});

  Formula next();

 private:
  unsigned draw(unsigned bound) { return static_cast<unsigned>(engine_() % bound); }
  Formula generate(std::size_t depth);
  Formula leaf();

  std::mt19937_64 engine_;
  RandomFormulaOptions options_;
  std::vector<std::string> names_;
};

}  // namespace ccbl
