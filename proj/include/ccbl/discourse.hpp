#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "ccbl/formula.hpp"
#include "ccbl/oracle.hpp"
#include "ccbl/sequent.hpp"

namespace ccbl {

enum class RuleId {
  Immersion,
  RightAnd,  // R1  h |- c, a & b      =>  h |- c, a   and  h |- c, b
  LeftOr,    // R2  h, a | b |- c      =>  h, a |- c   and  h, b |- c
  LeftNot,   // R3  h, ~a |- c         =>  h |- c, a
  RightNot,  // R4  h |- c, ~a         =>  h, a |- c
  LeftImp,   // R5  h, a -> b |- c     =>  h, b |- c   and  h |- c, a
  RightImp,  // R6  h |- c, a -> b     =>  h, a |- c, b
  Flatten,
};

/// Short tag: "R1".."R6", "immersion", "flatten".
const char* rule_tag(RuleId rule);
const char* rule_name(RuleId rule);
bool is_branching(RuleId rule);
/// True for R2, R3 and R5, whose target is a hypothesis.
bool targets_hypothesis(RuleId rule);

struct RuleApplication {
  RuleId rule;
  std::size_t target;

  friend bool operator==(const RuleApplication&, const RuleApplication&) = default;
};

struct RuleNotApplicable : std::logic_error {
  using std::logic_error::logic_error;
};

struct LimitExceeded : std::runtime_error {
  explicit LimitExceeded(std::size_t limit)
      : std::runtime_error("discourse exceeded " + std::to_string(limit) + " nodes"),
        max_nodes(limit) {}
  std::size_t max_nodes;
};

struct NotFull : std::logic_error {
  NotFull() : std::logic_error("discourse has an unexpanded leaf") {}
};

/// Rule choice for a flattened sequent. Non-branching rules (R3, R4, R6) win
/// over branching ones (R1, R2, R5); inside each group conclusions are scanned
/// left to right, then hypotheses left to right.
std::optional<RuleApplication> applicable_rule(const Sequent& s);

/// Children of `s` with the rule's target replaced in place and new members
/// appended, before flattening.
std::vector<Sequent> expand_unflattened(const Sequent& s, RuleId rule, std::size_t target);

/// expand_unflattened followed by flatten on each child.
std::vector<Sequent> expand(const Sequent& s, RuleId rule, std::size_t target);

using Expander = std::function<std::vector<Sequent>(const Sequent&, RuleId, std::size_t)>;

struct BuildOptions {
  std::size_t max_nodes = 1'000'000;
  /// Close any node that already has a TND match instead of expanding it.
  bool early_closure = false;
  /// Record flattening as separate Flatten nodes.
  bool explicit_flatten = false;
  /// Replaces expand_unflattened. Used for fault injection.
  Expander expander;
};

struct DiscourseNode {
  std::size_t id = 0;
  std::optional<std::size_t> parent;
  std::size_t depth = 0;
  Sequent sequent;
  std::optional<RuleId> rule;
  std::optional<std::size_t> target;
  std::vector<std::size_t> children;
  /// Set on leaves.
  std::optional<LeafStatus> status;
};

struct DiscourseStats {
  std::size_t nodes = 0;
  std::size_t depth = 0;
  std::size_t leaves = 0;
};

struct DiscourseTree {
  Formula root_formula = Formula::top();
  std::vector<DiscourseNode> nodes;
  std::size_t root_id = 0;
  DiscourseStats stats;

  const DiscourseNode& node(std::size_t id) const { return nodes.at(id); }
  const DiscourseNode& root() const { return nodes.at(root_id); }
  std::vector<std::size_t> leaf_ids() const;
  /// Every leaf carries a status.
  bool is_full() const;
};

/// Full deductive discourse for an Iff-free formula: an Immersion root whose
/// single child is the flattened immersion, expanded until no rule applies.
/// Throws std::invalid_argument on <->, LimitExceeded past max_nodes.
DiscourseTree build_discourse(const Formula& f, const BuildOptions& options = {});

enum class Deconstruction { None, IrreconcilableLeaves, NonLogicalLeaf };

const char* to_string(Deconstruction d);

struct Verdict {
  ModalClass modal = ModalClass::ContextualTruth;
  Deconstruction deconstruction = Deconstruction::None;
  /// Tautology: the TND leaves. Contradiction: the refuting leaves (the empty
  /// clause leaves when present, otherwise all open leaves).
  std::vector<std::size_t> evidence_leaves;
  /// Contextual truth only. `model` binds just the variables the clause
  /// search fixed; `model_total` extends it with 0 over the root vocabulary.
  std::optional<Assignment> model;
  std::optional<Assignment> model_total;
  std::optional<Assignment> counterexample;
  std::optional<std::size_t> counterexample_leaf;
};

/// Throws NotFull. Model and counterexample are checked against evaluate()
/// on the root formula before returning.
Verdict classify(const DiscourseTree& tree);

enum class StepKind { Axiom, OpenLeaf, EmptyLeaf, Introduction };

struct TranscriptStep {
  StepKind kind;
  std::size_t node_id;
  std::optional<RuleId> rule;
  std::vector<std::size_t> premises;
  std::string text;
};

/// Bottom-up reading of the discourse: each node appears after all of its
/// children, rules read right to left as introductions.
std::vector<TranscriptStep> transcript(const DiscourseTree& tree);
std::string render_transcript(const std::vector<TranscriptStep>& steps);

}  // namespace ccbl
