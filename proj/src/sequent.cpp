#include "ccbl/sequent.hpp"

#include <algorithm>

#include "ccbl/syntax.hpp"

namespace ccbl {

std::size_t Sequent::connective_count() const {
  std::size_t n = 0;
  for (const auto& h : hypotheses) n += h.connective_count();
  for (const auto& c : conclusions) n += c.connective_count();
  return n;
}

namespace {

// Splits every member of kind `split` in place, keeping operand order, and
// drops members of kind `neutral`.
std::vector<Formula> flatten_side(const std::vector<Formula>& side, Connective split,
                                  Connective neutral) {
  std::vector<Formula> out;
  out.reserve(side.size());
  std::vector<Formula> stack;
  for (const auto& member : side) {
    stack.push_back(member);
    while (!stack.empty()) {
      Formula f = stack.back();
      stack.pop_back();
      if (f.kind() == split) {
        stack.push_back(f.rhs());
        stack.push_back(f.lhs());
      } else if (f.kind() != neutral) {
        out.push_back(std::move(f));
      }
    }
  }
  return out;
}

bool contains(const std::vector<Formula>& side, const Formula& f) {
  return std::find(side.begin(), side.end(), f) != side.end();
}

}  // namespace

Sequent flatten(const Sequent& s) {
  return {flatten_side(s.hypotheses, Connective::And, Connective::Top),
          flatten_side(s.conclusions, Connective::Or, Connective::Bottom)};
}

Sequent immerse(const Formula& f) { return flatten(Sequent{{}, {f}}); }

bool is_closed(const Sequent& s) {
  auto atomic = [](const Formula& f) { return f.is_atomic(); };
  return std::all_of(s.hypotheses.begin(), s.hypotheses.end(), atomic) &&
         std::all_of(s.conclusions.begin(), s.conclusions.end(), atomic);
}

std::optional<Formula> tnd_witness(const Sequent& s) {
  for (const auto& h : s.hypotheses) {
    if (h.kind() == Connective::Bottom) return h;
    if (contains(s.conclusions, h)) return h;
  }
  for (const auto& c : s.conclusions)
    if (c.kind() == Connective::Top) return c;
  return std::nullopt;
}

LeafStatus leaf_status(const Sequent& s) {
  if (!is_closed(s)) throw NotClosed();
  if (auto witness = tnd_witness(s)) return TndInstance{*witness};
  Clause clause;
  auto add = [&](const Formula& f, bool positive) {
    if (f.kind() != Connective::Var) return;
    Literal lit{f.name(), positive};
    if (std::find(clause.begin(), clause.end(), lit) == clause.end()) clause.push_back(lit);
  };
  for (const auto& h : s.hypotheses) add(h, false);
  for (const auto& c : s.conclusions) add(c, true);
  if (clause.empty()) return EmptyClause{};
  return OpenClause{std::move(clause)};
}

namespace {

Formula fold(const std::vector<Formula>& side, Formula seed, bool conjunctive, bool seed_first) {
  Formula acc = seed;
  bool have_acc = seed_first;
  for (const auto& f : side) {
    if (!have_acc) {
      acc = f;
      have_acc = true;
    } else {
      acc = conjunctive ? Formula::conjunction(acc, f) : Formula::disjunction(acc, f);
    }
  }
  if (!seed_first && have_acc)
    acc = conjunctive ? Formula::conjunction(acc, seed) : Formula::disjunction(acc, seed);
  return acc;
}

}  // namespace

Formula to_formula(const Sequent& s) {
  return Formula::implication(fold(s.hypotheses, Formula::top(), true, true),
                              fold(s.conclusions, Formula::bottom(), false, false));
}

Formula to_display_formula(const Sequent& s) {
  auto side = [](const std::vector<Formula>& members, Formula empty, bool conjunctive) {
    if (members.empty()) return empty;
    Formula acc = members.front();
    for (std::size_t i = 1; i < members.size(); ++i)
      acc = conjunctive ? Formula::conjunction(acc, members[i])
                        : Formula::disjunction(acc, members[i]);
    return acc;
  };
  Formula rhs = side(s.conclusions, Formula::bottom(), false);
  if (s.hypotheses.empty()) return rhs;
  return Formula::implication(side(s.hypotheses, Formula::top(), true), rhs);
}

std::string render(const Sequent& s) {
  std::string out;
  auto side = [&](const std::vector<Formula>& members) {
    for (std::size_t i = 0; i < members.size(); ++i) {
      if (i) out += ", ";
      out += render(members[i]);
    }
  };
  side(s.hypotheses);
  out += s.hypotheses.empty() ? "|-" : " |-";
  if (!s.conclusions.empty()) out += ' ';
  side(s.conclusions);
  return out;
}

Formula clause_formula(const Clause& c) {
  if (c.empty()) return Formula::bottom();
  auto literal = [](const Literal& l) {
    Formula v = Formula::var(l.variable);
    return l.positive ? v : Formula::negation(v);
  };
  Formula acc = literal(c.front());
  for (std::size_t i = 1; i < c.size(); ++i) acc = Formula::disjunction(acc, literal(c[i]));
  return acc;
}

std::string render(const Clause& c) { return render(clause_formula(c)); }

}  // namespace ccbl
