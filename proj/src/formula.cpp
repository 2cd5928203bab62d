#include "ccbl/formula.hpp"

#include <algorithm>
#include <cassert>
#include <vector>

namespace ccbl {

Formula Formula::make(Connective kind, std::string name, std::optional<Formula> lhs,
                      std::optional<Formula> rhs) {
  auto node = std::make_shared<detail::FormulaNode>();
  node->kind = kind;
  node->name = std::move(name);
  if (lhs) {
    node->connectives = 1 + lhs->connective_count();
    node->depth = 1 + lhs->depth();
  }
  if (rhs) {
    node->connectives += rhs->connective_count();
    node->depth = std::max(node->depth, 1 + rhs->depth());
  }
  node->lhs = std::move(lhs);
  node->rhs = std::move(rhs);
  return Formula(std::move(node));
}

Formula Formula::top() {
  static const Formula value = make(Connective::Top, {}, std::nullopt, std::nullopt);
  return value;
}

Formula Formula::bottom() {
  static const Formula value = make(Connective::Bottom, {}, std::nullopt, std::nullopt);
  return value;
}

Formula Formula::var(std::string name) {
  if (!is_identifier(name) || name == "t" || name == "f")
    throw std::invalid_argument("invalid variable name '" + name + "'");
  return make(Connective::Var, std::move(name), std::nullopt, std::nullopt);
}

Formula Formula::negation(Formula operand) {
  return make(Connective::Not, {}, std::move(operand), std::nullopt);
}

Formula Formula::conjunction(Formula lhs, Formula rhs) {
  return make(Connective::And, {}, std::move(lhs), std::move(rhs));
}

Formula Formula::disjunction(Formula lhs, Formula rhs) {
  return make(Connective::Or, {}, std::move(lhs), std::move(rhs));
}

Formula Formula::implication(Formula lhs, Formula rhs) {
  return make(Connective::Implies, {}, std::move(lhs), std::move(rhs));
}

Formula Formula::biconditional(Formula lhs, Formula rhs) {
  return make(Connective::Iff, {}, std::move(lhs), std::move(rhs));
}

Connective Formula::kind() const { return node_->kind; }
bool Formula::is_binary() const { return node_->rhs.has_value(); }
const std::string& Formula::name() const { return node_->name; }
std::size_t Formula::connective_count() const { return node_->connectives; }
std::size_t Formula::depth() const { return node_->depth; }

const Formula& Formula::lhs() const {
  if (!node_->lhs) throw std::logic_error("formula has no operand");
  return *node_->lhs;
}

const Formula& Formula::rhs() const {
  if (!node_->rhs) throw std::logic_error("formula has no right operand");
  return *node_->rhs;
}

bool operator==(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return true;
  if (a.kind() != b.kind() || a.connective_count() != b.connective_count()) return false;
  switch (a.kind()) {
    case Connective::Top:
    case Connective::Bottom:
      return true;
    case Connective::Var:
      return a.name() == b.name();
    case Connective::Not:
      return a.lhs() == b.lhs();
    default:
      return a.lhs() == b.lhs() && a.rhs() == b.rhs();
  }
}

bool is_identifier(std::string_view text) {
  auto alpha = [](char c) { return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_'; };
  auto digit = [](char c) { return c >= '0' && c <= '9'; };
  if (text.empty() || !alpha(text.front())) return false;
  return std::all_of(text.begin() + 1, text.end(), [&](char c) { return alpha(c) || digit(c); });
}

namespace {

void collect(const Formula& f, std::set<std::string>& out) {
  switch (f.kind()) {
    case Connective::Top:
    case Connective::Bottom:
      return;
    case Connective::Var:
      out.insert(f.name());
      return;
    case Connective::Not:
      collect(f.lhs(), out);
      return;
    default:
      collect(f.lhs(), out);
      collect(f.rhs(), out);
  }
}

}  // namespace

std::set<std::string> variables(const Formula& f) {
  std::set<std::string> out;
  collect(f, out);
  return out;
}

bool evaluate(const Formula& f, const Assignment& a) {
  switch (f.kind()) {
    case Connective::Top:
      return true;
    case Connective::Bottom:
      return false;
    case Connective::Var: {
      auto it = a.find(f.name());
      if (it == a.end()) throw UnboundVariable(f.name());
      return it->second;
    }
    case Connective::Not:
      return !evaluate(f.lhs(), a);
    case Connective::And: {
      // Both sides are evaluated so partial assignments are always reported.
      bool l = evaluate(f.lhs(), a);
      bool r = evaluate(f.rhs(), a);
      return l && r;
    }
    case Connective::Or: {
      bool l = evaluate(f.lhs(), a);
      bool r = evaluate(f.rhs(), a);
      return l || r;
    }
    case Connective::Implies: {
      bool l = evaluate(f.lhs(), a);
      bool r = evaluate(f.rhs(), a);
      return !l || r;
    }
    case Connective::Iff:
      return evaluate(f.lhs(), a) == evaluate(f.rhs(), a);
  }
  assert(false);
  return false;
}

bool contains_iff(const Formula& f) {
  if (f.kind() == Connective::Iff) return true;
  if (f.is_atomic()) return false;
  if (f.kind() == Connective::Not) return contains_iff(f.lhs());
  return contains_iff(f.lhs()) || contains_iff(f.rhs());
}

Formula desugar_iff(const Formula& f) {
  if (!contains_iff(f)) return f;
  switch (f.kind()) {
    case Connective::Not:
      return Formula::negation(desugar_iff(f.lhs()));
    case Connective::And:
      return Formula::conjunction(desugar_iff(f.lhs()), desugar_iff(f.rhs()));
    case Connective::Or:
      return Formula::disjunction(desugar_iff(f.lhs()), desugar_iff(f.rhs()));
    case Connective::Implies:
      return Formula::implication(desugar_iff(f.lhs()), desugar_iff(f.rhs()));
    case Connective::Iff: {
      Formula l = desugar_iff(f.lhs());
      Formula r = desugar_iff(f.rhs());
      return Formula::conjunction(Formula::implication(l, r), Formula::implication(r, l));
    }
    default:
      return f;
  }
}

}  // namespace ccbl
