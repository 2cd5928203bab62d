#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "ccbl/formula.hpp"

namespace ccbl {

/// Cognitive implication (h1 & ... & hn) -> (c1 | ... | cm). An empty
/// hypothesis side reads as t, an empty conclusion side as f. Both sides are
/// ordered multisets: order is kept for reproducible rule targeting and
/// duplicates are allowed.
struct Sequent {
  std::vector<Formula> hypotheses;
  std::vector<Formula> conclusions;

  std::size_t connective_count() const;

  friend bool operator==(const Sequent&, const Sequent&) = default;
};

struct Literal {
  std::string variable;
  bool positive = true;

  friend bool operator==(const Literal&, const Literal&) = default;
};

/// Disjunction of literals; an empty clause is f.
using Clause = std::vector<Literal>;

struct TndInstance {
  /// The formula occurring on both sides, or t / f when the closure comes from
  /// t among the conclusions or f among the hypotheses.
  Formula witness;
};
struct OpenClause {
  Clause clause;
};
struct EmptyClause {};

using LeafStatus = std::variant<TndInstance, OpenClause, EmptyClause>;

struct NotClosed : std::logic_error {
  NotClosed() : std::logic_error("sequent is not closed") {}
};

/// Embeds f as t -> (f | f) and flattens the result.
Sequent immerse(const Formula& f);

/// Splits top-level & among hypotheses and top-level | among conclusions to a
/// fixpoint, then drops t from the hypotheses and f from the conclusions.
Sequent flatten(const Sequent& s);

/// True iff every member on both sides is a variable or constant.
bool is_closed(const Sequent& s);

/// First TND match in the sequent: a formula shared by both sides, t among the
/// conclusions or f among the hypotheses. Works on any sequent, closed or not.
std::optional<Formula> tnd_witness(const Sequent& s);

/// Throws NotClosed unless is_closed(s).
LeafStatus leaf_status(const Sequent& s);

/// (t & h1 & ... & hn) -> (c1 | ... | cm | f).
Formula to_formula(const Sequent& s);
/// Same reading with the neutral t / f dropped where a side is nonempty.
Formula to_display_formula(const Sequent& s);

/// `h1, h2 |- c1, c2`
std::string render(const Sequent& s);
Formula clause_formula(const Clause& c);
std::string render(const Clause& c);

}  // namespace ccbl
