#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "ccbl/discourse.hpp"
#include "ccbl/sequent.hpp"

namespace ccbl {

struct CcnfClause {
  Clause literals;
  /// Set for clauses with complementary literals and for clauses that come
  /// from TND leaves. A tautological clause without literals stands for t.
  bool tautological = false;
  std::size_t leaf_id = 0;
};

/// Conjunction of cognitive implications t -> (l1 | ... | lk), one per leaf of
/// a full discourse, in leaf order.
struct Ccnf {
  Formula source;
  std::vector<CcnfClause> clauses;
};

/// Throws NotFull. A TND leaf whose shared member contains a variable v gives
/// the clause {v, ~v}; a TND leaf closed by a constant gives the literal-free
/// tautological clause.
Ccnf ccnf_of(const DiscourseTree& tree);

/// Conjunction of the clause formulas (t for no clauses).
Formula ccnf_formula(const Ccnf& c);

/// `(source) <-> (t -> l11 | l12) & (t -> l21 | ...)`
std::string render_summary(const Ccnf& c);

/// DIMACS CNF. Variables are numbered by first occurrence. An empty clause is
/// a lone `0` line; literal-free tautological clauses have no DIMACS form and
/// are left out.
std::string export_dimacs(const Ccnf& c, bool prune_tautologies = false);

}  // namespace ccbl
