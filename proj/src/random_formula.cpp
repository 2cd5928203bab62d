#include "ccbl/random_formula.hpp"

namespace ccbl {

RandomFormulaGenerator::RandomFormulaGenerator(std::uint64_t seed, RandomFormulaOptions options)
    : engine_(seed), options_(options) {
  static const char* const base[] = {"p", "q", "r", "s", "u", "v", "w", "x", "y", "z"};
  for (std::size_t i = 0; i < options_.variables; ++i)
    names_.push_back(i < std::size(base) ? base[i] : "x" + std::to_string(i));
}

Formula RandomFormulaGenerator::next() { return generate(0); }

Formula RandomFormulaGenerator::leaf() {
  if (names_.empty() || draw(100) < options_.constant_percent)
    return draw(2) ? Formula::top() : Formula::bottom();
  return Formula::var(names_[draw(static_cast<unsigned>(names_.size()))]);
}

Formula RandomFormulaGenerator::generate(std::size_t depth) {
  if (depth >= options_.max_depth || (depth > 0 && draw(100) < options_.leaf_percent))
    return leaf();
  unsigned kinds = options_.allow_iff ? 5 : 4;
  switch (draw(kinds)) {
    case 0: return Formula::negation(generate(depth + 1));
    case 1: {
      Formula l = generate(depth + 1);
      return Formula::conjunction(l, generate(depth + 1));
    }
    case 2: {
      Formula l = generate(depth + 1);
      return Formula::disjunction(l, generate(depth + 1));
    }
    case 3: {
      Formula l = generate(depth + 1);
      return Formula::implication(l, generate(depth + 1));
    }
    default: {
      Formula l = generate(depth + 1);
      return Formula::biconditional(l, generate(depth + 1));
    }
  }
}

}  // namespace ccbl
