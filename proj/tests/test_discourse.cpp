#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "ccbl/discourse.hpp"
#include "ccbl/export.hpp"
#include "ccbl/random_formula.hpp"
#include "ccbl/selfcheck.hpp"
#include "ccbl/syntax.hpp"
#include "support/brute.hpp"

using namespace ccbl;

namespace {

const char* const kLukasiewicz2 = "(p -> (q -> r)) -> ((p -> q) -> (p -> r))";

std::vector<Formula> side(std::initializer_list<const char*> texts) {
  std::vector<Formula> out;
  for (const char* t : texts) out.push_back(parse(t));
  return out;
}

Sequent seq(std::initializer_list<const char*> h, std::initializer_list<const char*> c) {
  return {side(h), side(c)};
}

DiscourseTree tree_of(const char* text, const BuildOptions& options = {}) {
  return build_discourse(parse(text), options);
}

std::vector<RuleId> rules_in_order(const DiscourseTree& tree) {
  std::vector<RuleId> out;
  for (const auto& n : tree.nodes)
    if (n.rule) out.push_back(*n.rule);
  return out;
}

// Shares a variable across the two sides.
bool shares_variable(const Sequent& s) {
  for (const auto& h : s.hypotheses)
    if (h.kind() == Connective::Var &&
        std::find(s.conclusions.begin(), s.conclusions.end(), h) != s.conclusions.end())
      return true;
  return false;
}

}  // namespace

TEST_CASE("applicable_rule") {
  auto first = applicable_rule(seq({}, {kLukasiewicz2}));
  REQUIRE(first);
  CHECK(*first == RuleApplication{RuleId::RightImp, 0});
  CHECK_FALSE(applicable_rule(seq({"p"}, {"q"})).has_value());
  // Non-branching first; R6 on the conclusion before R3 on the hypothesis.
  CHECK(*applicable_rule(seq({"~a"}, {"a -> b"})) == RuleApplication{RuleId::RightImp, 0});
  CHECK(*applicable_rule(seq({"~a"}, {"b"})) == RuleApplication{RuleId::LeftNot, 0});
  CHECK(*applicable_rule(seq({"a | b", "~c"}, {"d & e"})) == RuleApplication{RuleId::LeftNot, 1});
  CHECK(*applicable_rule(seq({"a | b"}, {"d & e"})) == RuleApplication{RuleId::RightAnd, 0});
  CHECK(*applicable_rule(seq({"a", "a | b", "a -> b"}, {"c"})) ==
        RuleApplication{RuleId::LeftOr, 1});
  CHECK_THROWS_AS(applicable_rule(seq({}, {"a <-> b"})), std::invalid_argument);
}

TEST_CASE("expand follows each rule schema") {
  CHECK(expand(seq({}, {kLukasiewicz2}), RuleId::RightImp, 0) ==
        std::vector<Sequent>{seq({"p -> (q -> r)"}, {"(p -> q) -> (p -> r)"})});
  CHECK(expand(seq({"p -> (q -> r)", "p"}, {"r"}), RuleId::LeftImp, 0) ==
        std::vector<Sequent>{seq({"q -> r", "p"}, {"r"}), seq({"p"}, {"r", "p"})});
  CHECK(expand(seq({}, {"~p"}), RuleId::RightNot, 0) == std::vector<Sequent>{seq({"p"}, {})});
  CHECK(expand(seq({"h"}, {"c", "a & b"}), RuleId::RightAnd, 1) ==
        std::vector<Sequent>{seq({"h"}, {"c", "a"}), seq({"h"}, {"c", "b"})});
  CHECK(expand(seq({"h", "a | b"}, {"c"}), RuleId::LeftOr, 1) ==
        std::vector<Sequent>{seq({"h", "a"}, {"c"}), seq({"h", "b"}, {"c"})});
  CHECK(expand(seq({"h", "~a"}, {"c"}), RuleId::LeftNot, 1) ==
        std::vector<Sequent>{seq({"h"}, {"c", "a"})});
  // Children are re-flattened.
  CHECK(expand(seq({}, {"(a & b) -> (c | d)"}), RuleId::RightImp, 0) ==
        std::vector<Sequent>{seq({"a", "b"}, {"c", "d"})});
}

TEST_CASE("expand rejects misapplied rules") {
  CHECK_THROWS_AS(expand(seq({"p"}, {"q"}), RuleId::RightImp, 0), RuleNotApplicable);
  CHECK_THROWS_AS(expand(seq({"p -> q"}, {}), RuleId::LeftImp, 1), RuleNotApplicable);
  CHECK_THROWS_AS(expand(seq({}, {"~p"}), RuleId::Immersion, 0), RuleNotApplicable);
  CHECK_THROWS_AS(expand(seq({}, {"~p"}), RuleId::LeftNot, 0), RuleNotApplicable);
}

TEST_CASE("every rule is an equivalence on schematic sequents") {
  const std::pair<RuleId, Sequent> cases[] = {
      {RuleId::RightAnd, seq({"h"}, {"c", "alpha & beta"})},
      {RuleId::LeftOr, seq({"h", "alpha | beta"}, {"c"})},
      {RuleId::LeftNot, seq({"h", "~alpha"}, {"c"})},
      {RuleId::RightNot, seq({"h"}, {"c", "~alpha"})},
      {RuleId::LeftImp, seq({"h", "alpha -> beta"}, {"c"})},
      {RuleId::RightImp, seq({"h"}, {"c", "alpha -> beta"})},
  };
  for (const auto& [rule, s] : cases) {
    CAPTURE(rule_tag(rule));
    auto children = expand(s, rule, 1);
    CHECK(children.size() == (is_branching(rule) ? 2u : 1u));
    CHECK(brute::sound_step(s, children));
  }
}

TEST_CASE("Lukasiewicz axiom 2 discourse") {
  auto tree = tree_of(kLukasiewicz2);
  auto rules = rules_in_order(tree);
  // Immersion, three R6 before any R5, then R5 until closed. Five R5 are
  // needed: p -> q is copied into both branches of the first R5.
  CHECK(rules == std::vector<RuleId>{RuleId::Immersion, RuleId::RightImp, RuleId::RightImp,
                                     RuleId::RightImp, RuleId::LeftImp, RuleId::LeftImp,
                                     RuleId::LeftImp, RuleId::LeftImp, RuleId::LeftImp});
  CHECK(tree.stats.nodes == 15);
  CHECK(tree.stats.leaves == 6);
  CHECK(tree.stats.depth == 7);
  for (std::size_t id : tree.leaf_ids()) {
    const auto& leaf = tree.node(id);
    CAPTURE(render(leaf.sequent));
    CHECK(std::holds_alternative<TndInstance>(*leaf.status));
    CHECK(shares_variable(leaf.sequent));
  }
  CHECK(classify(tree).modal == ModalClass::Tautology);
}

TEST_CASE("p | ~p discourse") {
  auto tree = tree_of("p | ~p");
  REQUIRE(tree.stats.nodes == 3);
  CHECK(tree.root().rule == RuleId::Immersion);
  CHECK(tree.node(1).sequent == seq({}, {"p", "~p"}));
  CHECK(tree.node(1).rule == RuleId::RightNot);
  CHECK(tree.node(1).target == 1u);
  CHECK(tree.node(2).sequent == seq({"p"}, {"p"}));
  CHECK(std::holds_alternative<TndInstance>(*tree.node(2).status));
}

TEST_CASE("p & ~p discourse") {
  auto tree = tree_of("p & ~p");
  std::vector<Clause> clauses;
  for (std::size_t id : tree.leaf_ids()) {
    auto* open = std::get_if<OpenClause>(&*tree.node(id).status);
    REQUIRE(open);
    clauses.push_back(open->clause);
  }
  CHECK(clauses == std::vector<Clause>{{{"p", true}}, {{"p", false}}});
  CHECK_FALSE(brute::satisfiable(clauses));
}

TEST_CASE("discourse structure invariants") {
  RandomFormulaGenerator gen(23);
  for (int i = 0; i < 300; ++i) {
    Formula f = gen.next();
    auto tree = build_discourse(f);
    CAPTURE(render(f));
    CHECK(tree.is_full());
    CHECK(tree.root().children.size() == 1);
    std::size_t leaves = 0;
    for (const auto& n : tree.nodes) {
      if (n.id != tree.root_id) {
        REQUIRE(n.parent);
        CHECK(*n.parent < n.id);
        const auto& siblings = tree.node(*n.parent).children;
        CHECK(std::count(siblings.begin(), siblings.end(), n.id) == 1);
      }
      if (n.children.empty()) {
        ++leaves;
        CHECK_FALSE(n.rule.has_value());
        CHECK(is_closed(n.sequent));
      } else {
        REQUIRE(n.rule);
        CHECK(n.children.size() == (is_branching(*n.rule) ? 2u : 1u));
        if (*n.rule != RuleId::Immersion) {
          std::vector<Sequent> children;
          for (std::size_t c : n.children) children.push_back(tree.node(c).sequent);
          CHECK(brute::sound_step(n.sequent, children));
          for (const auto& c : children)
            CHECK(c.connective_count() < n.sequent.connective_count());
        }
      }
    }
    CHECK(leaves == tree.stats.leaves);
    CHECK(tree.nodes.size() == tree.stats.nodes);
  }
}

TEST_CASE("classify") {
  CHECK(classify(tree_of("p -> (q -> p)")).modal == ModalClass::Tautology);

  auto contra = classify(tree_of("(t -> p) & (p -> f)"));
  CHECK(contra.modal == ModalClass::Contradiction);
  CHECK(contra.deconstruction == Deconstruction::IrreconcilableLeaves);
  CHECK(contra.evidence_leaves.size() == 2);

  auto ct = classify(tree_of("p -> q"));
  REQUIRE(ct.modal == ModalClass::ContextualTruth);
  CHECK(*ct.model == Assignment{{"p", false}});
  CHECK(*ct.counterexample == Assignment{{"p", true}, {"q", false}});
  CHECK(*ct.model_total == Assignment{{"p", false}, {"q", false}});

  auto empty = classify(tree_of("t -> f"));
  CHECK(empty.modal == ModalClass::Contradiction);
  CHECK(empty.deconstruction == Deconstruction::NonLogicalLeaf);
}

TEST_CASE("liar formula is deconstructed") {
  auto v = classify(tree_of("t -> (((t -> p) & (p -> f)) | f)"));
  CHECK(v.modal == ModalClass::Contradiction);
  CHECK(v.deconstruction != Deconstruction::None);
  for (const char* text : {"t -> ((t -> f) | f)", "t -> (t -> f)", "t -> f", "f | f"}) {
    auto chain = classify(tree_of(text));
    CHECK(chain.modal == ModalClass::Contradiction);
    CHECK(chain.deconstruction == Deconstruction::NonLogicalLeaf);
  }
}

TEST_CASE("classification matches the truth table and evidence verifies") {
  RandomFormulaGenerator gen(29);
  for (int i = 0; i < 500; ++i) {
    Formula f = gen.next();
    auto tree = build_discourse(f);
    auto v = classify(tree);
    CAPTURE(render(f));
    CHECK(v.modal == brute::modal_class(f));
    if (v.modal == ModalClass::ContextualTruth) {
      CHECK(brute::eval(f, *v.model_total));
      CHECK_FALSE(brute::eval(f, *v.counterexample));
      for (std::size_t id : tree.leaf_ids())
        if (auto* open = std::get_if<OpenClause>(&*tree.node(id).status))
          CHECK(clause_satisfied(open->clause, *v.model));
    }
  }
}

TEST_CASE("classify needs a full discourse") {
  auto tree = tree_of("p -> q");
  tree.nodes.back().status.reset();
  CHECK_FALSE(tree.is_full());
  CHECK_THROWS_AS(classify(tree), NotFull);
  CHECK_THROWS_AS(transcript(tree), NotFull);
}

TEST_CASE("build_discourse rejects <-> and enforces the node limit") {
  CHECK_THROWS_AS(tree_of("p <-> q"), std::invalid_argument);
  BuildOptions small;
  small.max_nodes = 4;
  CHECK_THROWS_AS(tree_of(kLukasiewicz2, small), LimitExceeded);
  small.max_nodes = 15;
  CHECK_NOTHROW(tree_of(kLukasiewicz2, small));
}

TEST_CASE("early closure stops at the first TND match") {
  BuildOptions early;
  early.early_closure = true;
  auto tree = tree_of(kLukasiewicz2, early);
  CHECK(tree.stats.leaves < 6);
  CHECK(classify(tree).modal == ModalClass::Tautology);
  auto shared = tree_of("(a -> b) -> (a -> b)", early);
  CHECK(shared.stats.nodes == 3);
}

TEST_CASE("explicit flatten nodes") {
  BuildOptions explicit_flatten;
  explicit_flatten.explicit_flatten = true;
  auto tree = tree_of("p | ~p", explicit_flatten);
  auto rules = rules_in_order(tree);
  CHECK(rules == std::vector<RuleId>{RuleId::Immersion, RuleId::Flatten, RuleId::RightNot});
  CHECK(classify(tree).modal == ModalClass::Tautology);
  CHECK(classify(tree_of("(a & b) -> a", explicit_flatten)).modal == ModalClass::Tautology);
}

TEST_CASE("transcript") {
  auto steps = transcript(tree_of("p | ~p"));
  REQUIRE(steps.size() == 3);
  CHECK(steps[0].kind == StepKind::Axiom);
  CHECK(steps[0].text == "p |- p");
  CHECK(steps[1].kind == StepKind::Introduction);
  CHECK(steps[1].rule == RuleId::RightNot);
  CHECK(steps[1].text == "|- p, ~p");
  CHECK(steps[2].rule == RuleId::Immersion);
  CHECK(steps[2].text == "p | ~p");

  auto luk = transcript(tree_of(kLukasiewicz2));
  CHECK(luk.size() == 15);
  CHECK(std::count_if(luk.begin(), luk.end(),
                      [](const auto& s) { return s.kind == StepKind::Axiom; }) == 6);
  CHECK(luk.back().text == kLukasiewicz2);

  auto single = transcript(tree_of("p"));
  REQUIRE(single.size() == 2);
  CHECK(single[0].kind == StepKind::OpenLeaf);
  CHECK(single[1].rule == RuleId::Immersion);
}

TEST_CASE("transcript lists children before parents") {
  RandomFormulaGenerator gen(31);
  for (int i = 0; i < 100; ++i) {
    auto tree = build_discourse(gen.next());
    auto steps = transcript(tree);
    REQUIRE(steps.size() == tree.nodes.size());
    std::vector<bool> seen(tree.nodes.size(), false);
    for (const auto& s : steps) {
      for (std::size_t c : tree.node(s.node_id).children) CHECK(seen[c]);
      seen[s.node_id] = true;
    }
  }
}

TEST_CASE("identical input gives byte-identical trees") {
  RandomFormulaGenerator gen(37);
  for (int i = 0; i < 100; ++i) {
    Formula f = gen.next();
    CHECK(to_json(build_discourse(f)).dump() == to_json(build_discourse(parse(render(f)))).dump());
  }
}

TEST_CASE("selfcheck passes and catches a corrupted R6") {
  SelfcheckOptions options;
  options.random_formulas = 200;
  options.audited_formulas = 50;
  auto results = run_selfcheck(options);
  CHECK(results.size() == 8);
  for (const auto& r : results) {
    CAPTURE(r.name);
    CAPTURE(r.detail);
    CHECK(r.passed);
  }

  // R6 that forgets the antecedent.
  options.expander = [](const Sequent& s, RuleId rule, std::size_t target) {
    auto children = expand_unflattened(s, rule, target);
    if (rule == RuleId::RightImp) children.front().hypotheses.pop_back();
    return children;
  };
  auto broken = run_selfcheck(options);
  CHECK_FALSE(broken.front().passed);
  CHECK(std::count_if(broken.begin(), broken.end(), [](const auto& r) { return !r.passed; }) > 1);
}
