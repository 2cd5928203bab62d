#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>

namespace ccbl {

namespace detail {
struct FormulaNode;
}

enum class Connective { Top, Bottom, Var, Not, And, Or, Implies, Iff };

/// Immutable propositional formula. Copies share structure; equality is
/// structural.
class Formula {
 public:
  static Formula top();
  static Formula bottom();
  /// Throws std::invalid_argument for names that are not identifiers or are
  /// the reserved constants `t` / `f`.
  static Formula var(std::string name);
  static Formula negation(Formula operand);
  static Formula conjunction(Formula lhs, Formula rhs);
  static Formula disjunction(Formula lhs, Formula rhs);
  static Formula implication(Formula lhs, Formula rhs);
  static Formula biconditional(Formula lhs, Formula rhs);

  Connective kind() const;
  bool is_atomic() const {
    return kind() == Connective::Var || kind() == Connective::Top ||
           kind() == Connective::Bottom;
  }
  bool is_binary() const;

  /// Variable name; empty for non-variables.
  const std::string& name() const;
  /// Operand of a negation, or left operand of a binary connective.
  const Formula& lhs() const;
  /// Right operand of a binary connective.
  const Formula& rhs() const;

  /// Number of connective occurrences (constants and variables count zero).
  std::size_t connective_count() const;
  std::size_t depth() const;

  friend bool operator==(const Formula& a, const Formula& b);
  friend bool operator!=(const Formula& a, const Formula& b) { return !(a == b); }

 private:
  explicit Formula(std::shared_ptr<const detail::FormulaNode> node) : node_(std::move(node)) {}
  static Formula make(Connective kind, std::string name, std::optional<Formula> lhs,
                      std::optional<Formula> rhs);

  std::shared_ptr<const detail::FormulaNode> node_;
};

namespace detail {
struct FormulaNode {
  Connective kind;
  std::string name;
  std::optional<Formula> lhs;
  std::optional<Formula> rhs;
  std::size_t connectives = 0;
  std::size_t depth = 0;
};
}  // namespace detail

using Assignment = std::map<std::string, bool>;

struct UnboundVariable : std::runtime_error {
  explicit UnboundVariable(const std::string& name)
      : std::runtime_error("unbound variable: " + name), variable(name) {}
  std::string variable;
};

bool is_identifier(std::string_view text);

std::set<std::string> variables(const Formula& f);

/// Two-valued semantics. Throws UnboundVariable if `a` misses a variable of f.
bool evaluate(const Formula& f, const Assignment& a);

/// Replaces every a <-> b with (a -> b) & (b -> a).
Formula desugar_iff(const Formula& f);
bool contains_iff(const Formula& f);

}  // namespace ccbl
