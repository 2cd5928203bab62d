#include "ccbl/oracle.hpp"

#include <algorithm>
#include <bit>
#include <map>

#include "ccbl/syntax.hpp"

namespace ccbl {

const char* to_string(ModalClass c) {
  switch (c) {
    case ModalClass::Tautology: return "tautology";
    case ModalClass::ContextualTruth: return "contextual truth";
    case ModalClass::Contradiction: return "contradiction";
  }
  return "?";
}

namespace {

enum class Op : std::uint8_t { Var, Top, Bottom, Not, And, Or, Implies, Iff };

struct Instr {
  Op op;
  std::uint32_t var = 0;
};

// Postfix program over variable indices; index i is bit i of the row number.
struct Program {
  std::vector<std::string> vars;
  std::vector<Instr> code;
  std::size_t max_stack = 0;
};

void compile(const Formula& f, const std::map<std::string, std::uint32_t>& index,
             std::vector<Instr>& code) {
  switch (f.kind()) {
    case Connective::Top: code.push_back({Op::Top}); return;
    case Connective::Bottom: code.push_back({Op::Bottom}); return;
    case Connective::Var: code.push_back({Op::Var, index.at(f.name())}); return;
    case Connective::Not:
      compile(f.lhs(), index, code);
      code.push_back({Op::Not});
      return;
    default:
      break;
  }
  compile(f.lhs(), index, code);
  compile(f.rhs(), index, code);
  switch (f.kind()) {
    case Connective::And: code.push_back({Op::And}); break;
    case Connective::Or: code.push_back({Op::Or}); break;
    case Connective::Implies: code.push_back({Op::Implies}); break;
    default: code.push_back({Op::Iff}); break;
  }
}

Program compile(const Formula& f) {
  Program p;
  auto names = variables(f);
  if (names.size() > kMaxOracleVariables) throw TooManyVariables(names.size(), kMaxOracleVariables);
  std::map<std::string, std::uint32_t> index;
  for (const auto& n : names) {
    index[n] = static_cast<std::uint32_t>(p.vars.size());
    p.vars.push_back(n);
  }
  compile(f, index, p.code);
  std::size_t depth = 0;
  for (const auto& in : p.code) {
    if (in.op == Op::Var || in.op == Op::Top || in.op == Op::Bottom)
      p.max_stack = std::max(p.max_stack, ++depth);
    else if (in.op != Op::Not)
      --depth;
  }
  return p;
}

constexpr std::uint64_t kLanePattern[6] = {
    0xAAAAAAAAAAAAAAAAull, 0xCCCCCCCCCCCCCCCCull, 0xF0F0F0F0F0F0F0F0ull,
    0xFF00FF00FF00FF00ull, 0xFFFF0000FFFF0000ull, 0xFFFFFFFF00000000ull,
};

// Evaluates rows [64 * block, 64 * block + 63] at once.
std::uint64_t run_block(const Program& p, std::uint64_t block, std::uint64_t* stack) {
  std::size_t sp = 0;
  for (const auto& in : p.code) {
    switch (in.op) {
      case Op::Var:
        stack[sp++] = in.var < 6 ? kLanePattern[in.var]
                                 : (((block >> (in.var - 6)) & 1u) ? ~0ull : 0ull);
        break;
      case Op::Top: stack[sp++] = ~0ull; break;
      case Op::Bottom: stack[sp++] = 0; break;
      case Op::Not: stack[sp - 1] = ~stack[sp - 1]; break;
      case Op::And: --sp; stack[sp - 1] &= stack[sp]; break;
      case Op::Or: --sp; stack[sp - 1] |= stack[sp]; break;
      case Op::Implies: --sp; stack[sp - 1] = ~stack[sp - 1] | stack[sp]; break;
      case Op::Iff: --sp; stack[sp - 1] = ~(stack[sp - 1] ^ stack[sp]); break;
    }
  }
  return stack[0];
}

}  // namespace

RowCount count_true_rows(const Formula& f) {
  const Program p = compile(f);
  const std::size_t n = p.vars.size();
  RowCount result;
  result.rows = std::uint64_t{1} << n;
  const std::uint64_t valid = n >= 6 ? ~0ull : (std::uint64_t{1} << result.rows) - 1;
  const std::int64_t blocks = n >= 6 ? static_cast<std::int64_t>(result.rows >> 6) : 1;

  std::uint64_t true_rows = 0;
#pragma omp parallel if (blocks >= 256)
  {
    std::vector<std::uint64_t> stack(std::max<std::size_t>(p.max_stack, 1));
#pragma omp for reduction(+ : true_rows) schedule(static)
    for (std::int64_t b = 0; b < blocks; ++b)
      true_rows += static_cast<std::uint64_t>(
          std::popcount(run_block(p, static_cast<std::uint64_t>(b), stack.data()) & valid));
  }
  result.true_rows = true_rows;
  return result;
}

RowCount count_true_rows_reference(const Formula& f) {
  auto names = variables(f);
  if (names.size() > kMaxOracleVariables) throw TooManyVariables(names.size(), kMaxOracleVariables);
  std::vector<std::string> vars(names.begin(), names.end());
  RowCount result;
  result.rows = std::uint64_t{1} << vars.size();
  Assignment a;
  for (std::uint64_t row = 0; row < result.rows; ++row) {
    for (std::size_t i = 0; i < vars.size(); ++i) a[vars[i]] = (row >> i) & 1u;
    if (evaluate(f, a)) ++result.true_rows;
  }
  return result;
}

ModalClass class_of(const RowCount& count) {
  if (count.true_rows == count.rows) return ModalClass::Tautology;
  if (count.true_rows == 0) return ModalClass::Contradiction;
  return ModalClass::ContextualTruth;
}

ModalClass truth_table_class(const Formula& f) { return class_of(count_true_rows(f)); }

ModalClass truth_table_class_reference(const Formula& f) {
  return class_of(count_true_rows_reference(f));
}

bool equivalent(const Formula& f, const Formula& g) {
  return truth_table_class(Formula::biconditional(f, g)) == ModalClass::Tautology;
}

bool clause_satisfied(const Clause& c, const Assignment& a) {
  return std::any_of(c.begin(), c.end(), [&](const Literal& l) {
    auto it = a.find(l.variable);
    return it != a.end() && it->second == l.positive;
  });
}

namespace {

std::vector<std::string> clause_variables(const std::vector<Clause>& clauses) {
  std::vector<std::string> vars;
  for (const auto& c : clauses)
    for (const auto& l : c)
      if (std::find(vars.begin(), vars.end(), l.variable) == vars.end()) vars.push_back(l.variable);
  return vars;
}

class Dpll {
 public:
  explicit Dpll(const std::vector<Clause>& clauses) : clauses_(clauses) {}

  std::optional<Assignment> solve() {
    Assignment a;
    if (search(a)) return a;
    return std::nullopt;
  }

 private:
  enum class State { Satisfied, Falsified, Unit, Open };

  State inspect(const Clause& c, const Assignment& a, const Literal** unit) const {
    std::size_t unassigned = 0;
    for (const auto& l : c) {
      auto it = a.find(l.variable);
      if (it == a.end()) {
        ++unassigned;
        *unit = &l;
      } else if (it->second == l.positive) {
        return State::Satisfied;
      }
    }
    if (unassigned == 0) return State::Falsified;
    return unassigned == 1 ? State::Unit : State::Open;
  }

  // Unit propagation to fixpoint. Returns false on a falsified clause.
  bool propagate(Assignment& a) const {
    bool changed = true;
    while (changed) {
      changed = false;
      for (const auto& c : clauses_) {
        const Literal* unit = nullptr;
        State st = inspect(c, a, &unit);
        if (st == State::Falsified) return false;
        if (st == State::Unit) {
          a[unit->variable] = unit->positive;
          changed = true;
        }
      }
    }
    return true;
  }

  bool search(Assignment& a) const {
    if (!propagate(a)) return false;
    for (const auto& c : clauses_) {
      const Literal* unit = nullptr;
      if (inspect(c, a, &unit) != State::Open) continue;
      // Branch on the first unassigned literal, trying its own polarity first.
      const Literal* pick = nullptr;
      for (const auto& l : c)
        if (!a.count(l.variable)) {
          pick = &l;
          break;
        }
      for (bool value : {pick->positive, !pick->positive}) {
        Assignment trial = a;
        trial[pick->variable] = value;
        if (search(trial)) {
          a = std::move(trial);
          return true;
        }
      }
      return false;
    }
    return true;
  }

  const std::vector<Clause>& clauses_;
};

}  // namespace

std::optional<Assignment> sat(const std::vector<Clause>& clauses, std::size_t max_variables) {
  auto vars = clause_variables(clauses);
  if (vars.size() > max_variables) throw TooManyVariables(vars.size(), max_variables);
  auto model = Dpll(clauses).solve();
  if (model) {
    for (const auto& c : clauses)
      if (!clause_satisfied(c, *model))
        throw std::logic_error("sat: model misses clause " + render(c));
  }
  return model;
}

std::optional<Assignment> sat_exhaustive(const std::vector<Clause>& clauses) {
  auto vars = clause_variables(clauses);
  if (vars.size() > kMaxOracleVariables) throw TooManyVariables(vars.size(), kMaxOracleVariables);
  const std::uint64_t rows = std::uint64_t{1} << vars.size();
  Assignment a;
  for (std::uint64_t row = 0; row < rows; ++row) {
    for (std::size_t i = 0; i < vars.size(); ++i) a[vars[i]] = (row >> i) & 1u;
    if (std::all_of(clauses.begin(), clauses.end(),
                    [&](const Clause& c) { return clause_satisfied(c, a); }))
      return a;
  }
  return std::nullopt;
}

std::vector<SchemaCheck> check_schemas() {
  // h, c stand for the side contexts; alpha, beta for the rule operands.
  static const std::pair<const char*, const char*> schemas[] = {
      {"A1 double negation", "a <-> ~~a"},
      {"A1 contrapositive", "(a -> b) <-> (~b -> ~a)"},
      {"A1 deduction-resolution", "((h & a) -> b) <-> (h -> (a -> b))"},
      {"A1 distributivity", "(h -> (c | (a & b))) <-> ((h -> (c | a)) & (h -> (c | b)))"},
      {"A2 R1 right-side conjunction",
       "(h -> (c | (alpha & beta))) <-> ((h -> (c | alpha)) & (h -> (c | beta)))"},
      {"A2 R2 left-side disjunction",
       "((h & (alpha | beta)) -> c) <-> (((h & alpha) -> c) & ((h & beta) -> c))"},
      {"A2 R3 left-side negation", "((h & ~alpha) -> c) <-> (h -> (c | alpha))"},
      {"A2 R4 right-side negation", "(h -> (c | ~alpha)) <-> ((h & alpha) -> c)"},
      {"A2 R5 left-side implication",
       "((h & (alpha -> beta)) -> c) <-> (((h & beta) -> c) & (h -> (c | alpha)))"},
      {"A2 R6 right-side implication",
       "(h -> (c | (alpha -> beta))) <-> ((h & alpha) -> (c | beta))"},
      {"TND classical", "a | ~a"},
      {"TND implication", "a -> a"},
      {"TND general", "(a & h) -> (a | c)"},
      {"trivial: h -> (a | ~a)", "h -> (a | ~a)"},
      {"trivial: h -> t", "h -> t"},
      {"trivial: f -> c", "f -> c"},
      {"immersion", "(t -> (a | f)) <-> a"},
      {"Lukasiewicz axiom 1", "p -> (q -> p)"},
      {"Lukasiewicz axiom 2", "(p -> (q -> r)) -> ((p -> q) -> (p -> r))"},
      {"Lukasiewicz axiom 3", "(~p -> ~q) -> (q -> p)"},
      {"vocabulary: t -> p entails ~(p -> f)", "t -> ((t -> p) -> ~(p -> f))"},
      {"vocabulary: ~(p -> f) entails t -> p", "t -> (~(p -> f) -> (t -> p))"},
      {"vocabulary: equivalence", "(t -> p) <-> ~(p -> f)"},
      {"vocabulary: refutation", "((t -> p) & (p -> f)) -> f"},
  };
  std::vector<SchemaCheck> report;
  for (const auto& [name, text] : schemas) {
    Formula f = parse(text);
    RowCount count = count_true_rows(f);
    report.push_back({name, render(f), count.rows, class_of(count) == ModalClass::Tautology});
  }
  return report;
}

}  // namespace ccbl
