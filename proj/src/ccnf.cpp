#include "ccbl/ccnf.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "ccbl/syntax.hpp"

namespace ccbl {

namespace {

bool has_complementary(const Clause& c) {
  for (const auto& a : c)
    for (const auto& b : c)
      if (a.variable == b.variable && a.positive != b.positive) return true;
  return false;
}

}  // namespace

Ccnf ccnf_of(const DiscourseTree& tree) {
  Ccnf out{tree.root_formula, {}};
  for (std::size_t id : tree.leaf_ids()) {
    const auto& status = tree.node(id).status;
    if (!status) throw NotFull();
    CcnfClause clause;
    clause.leaf_id = id;
    if (const auto* tnd = std::get_if<TndInstance>(&*status)) {
      clause.tautological = true;
      auto vars = variables(tnd->witness);
      if (tnd->witness.kind() == Connective::Var)
        clause.literals = {{tnd->witness.name(), true}, {tnd->witness.name(), false}};
      else if (!vars.empty())
        clause.literals = {{*vars.begin(), true}, {*vars.begin(), false}};
    } else if (const auto* open = std::get_if<OpenClause>(&*status)) {
      clause.literals = open->clause;
      clause.tautological = has_complementary(clause.literals);
    }
    out.clauses.push_back(std::move(clause));
  }
  return out;
}

namespace {

Formula clause_or_top(const CcnfClause& c) {
  if (c.literals.empty() && c.tautological) return Formula::top();
  return clause_formula(c.literals);
}

}  // namespace

Formula ccnf_formula(const Ccnf& c) {
  if (c.clauses.empty()) return Formula::top();
  Formula acc = clause_or_top(c.clauses.front());
  for (std::size_t i = 1; i < c.clauses.size(); ++i)
    acc = Formula::conjunction(acc, clause_or_top(c.clauses[i]));
  return acc;
}

std::string render_summary(const Ccnf& c) {
  std::string out = "(" + render(c.source) + ") <-> ";
  if (c.clauses.empty()) return out + "t";
  for (std::size_t i = 0; i < c.clauses.size(); ++i) {
    if (i) out += " & ";
    out += "(t -> " + render(clause_or_top(c.clauses[i])) + ")";
  }
  return out;
}

std::string export_dimacs(const Ccnf& c, bool prune_tautologies) {
  std::vector<const CcnfClause*> kept;
  for (const auto& clause : c.clauses) {
    if (clause.tautological && (prune_tautologies || clause.literals.empty())) continue;
    kept.push_back(&clause);
  }
  std::map<std::string, int> number;
  for (const auto* clause : kept)
    for (const auto& l : clause->literals)
      if (!number.count(l.variable)) number.emplace(l.variable, static_cast<int>(number.size()) + 1);

  std::ostringstream out;
  out << "p cnf " << number.size() << ' ' << kept.size() << '\n';
  for (const auto* clause : kept) {
    for (const auto& l : clause->literals) out << (l.positive ? "" : "-") << number[l.variable] << ' ';
    out << "0\n";
  }
  return out.str();
}

}  // namespace ccbl
