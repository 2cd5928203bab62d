#include "ccbl/selfcheck.hpp"

#include <chrono>
#include <functional>
#include <sstream>

#include "ccbl/ccnf.hpp"
#include "ccbl/export.hpp"
#include "ccbl/oracle.hpp"
#include "ccbl/random_formula.hpp"
#include "ccbl/syntax.hpp"

namespace ccbl {

namespace {

struct Outcome {
  bool passed = true;
  std::string detail;

  void fail(const std::string& why) {
    if (passed) detail = why;
    passed = false;
  }
};

class Checker {
 public:
  explicit Checker(const SelfcheckOptions& options) : options_(options) {
    build_.expander = options.expander;
  }

  std::vector<CriterionResult> run() {
    std::vector<CriterionResult> out;
    add(out, 1, "schema soundness", 1.0, [&] { return schemas(); });
    add(out, 2, "completeness fixtures", 1.0, [&] { return completeness(); });
    add(out, 3, "Lukasiewicz axiom 2 discourse shape", 0, [&] { return lukasiewicz_shape(); });
    add(out, 4, "vocabulary fixtures", 0, [&] { return vocabulary(); });
    add(out, 5, "liar deconstruction", 0, [&] { return liar(); });
    add(out, 6, "oracle agreement", 30.0, [&] { return agreement(); });
    add(out, 7, "node equivalence audit", 0, [&] { return node_audit(); });
    add(out, 8, "termination and determinism", 0, [&] { return termination(); });
    return out;
  }

 private:
  void add(std::vector<CriterionResult>& out, int id, const char* name, double budget,
           const std::function<Outcome()>& check) {
    CriterionResult r;
    r.id = id;
    r.name = name;
    auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = check();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (budget > 0 && r.seconds >= budget) o.fail("over time budget");
    r.passed = o.passed;
    r.detail = o.detail;
    out.push_back(std::move(r));
  }

  DiscourseTree build(const Formula& f) const { return build_discourse(f, build_); }
  DiscourseTree build(const char* text) const { return build(desugar_iff(parse(text))); }

  std::vector<Sequent> children_of(const Sequent& s, RuleId rule, std::size_t target) const {
    auto raw = options_.expander ? options_.expander(s, rule, target)
                                 : expand_unflattened(s, rule, target);
    for (auto& c : raw) c = flatten(c);
    return raw;
  }

  static Formula conjunction_of(const std::vector<Sequent>& children) {
    Formula acc = Formula::top();
    for (const auto& c : children) acc = Formula::conjunction(acc, to_formula(c));
    return acc;
  }

  Outcome schemas() const {
    Outcome o;
    for (const auto& s : check_schemas())
      if (!s.tautology) o.fail("schema not a tautology: " + s.name);
    // The engine's own rules on schematic sequents.
    const Formula h = Formula::var("h"), c = Formula::var("c");
    const Formula a = Formula::var("alpha"), b = Formula::var("beta");
    const std::pair<RuleId, Sequent> cases[] = {
        {RuleId::RightAnd, {{h}, {c, Formula::conjunction(a, b)}}},
        {RuleId::LeftOr, {{h, Formula::disjunction(a, b)}, {c}}},
        {RuleId::LeftNot, {{h, Formula::negation(a)}, {c}}},
        {RuleId::RightNot, {{h}, {c, Formula::negation(a)}}},
        {RuleId::LeftImp, {{h, Formula::implication(a, b)}, {c}}},
        {RuleId::RightImp, {{h}, {c, Formula::implication(a, b)}}},
    };
    for (const auto& [rule, s] : cases) {
      auto children = children_of(s, rule, 1);
      if (children.size() != (is_branching(rule) ? 2u : 1u) ||
          !equivalent(to_formula(s), conjunction_of(children)))
        o.fail(std::string("engine rule unsound: ") + rule_tag(rule));
    }
    return o;
  }

  Outcome expect_proof(const char* text, std::size_t max_nodes) const {
    Outcome o;
    auto tree = build(text);
    if (classify(tree).modal != ModalClass::Tautology) o.fail(std::string("not proved: ") + text);
    for (std::size_t id : tree.leaf_ids())
      if (!std::holds_alternative<TndInstance>(*tree.node(id).status))
        o.fail(std::string("non-TND leaf in ") + text);
    if (max_nodes && tree.stats.nodes >= max_nodes) o.fail(std::string("tree too large: ") + text);
    return o;
  }

  Outcome completeness() const {
    Outcome o;
    for (const char* text : {"p -> (q -> p)", "(p -> (q -> r)) -> ((p -> q) -> (p -> r))",
                             "(~p -> ~q) -> (q -> p)", "(p & (p -> q)) -> q"}) {
      Outcome one = expect_proof(text, 100);
      if (!one.passed) o.fail(one.detail);
    }
    return o;
  }

  Outcome lukasiewicz_shape() const {
    Outcome o;
    auto tree = build("(p -> (q -> r)) -> ((p -> q) -> (p -> r))");
    std::vector<RuleId> applied;
    for (const auto& n : tree.nodes)
      if (n.rule && *n.rule != RuleId::Flatten) applied.push_back(*n.rule);
    const RuleId prefix[] = {RuleId::Immersion, RuleId::RightImp, RuleId::RightImp,
                             RuleId::RightImp};
    if (applied.size() < 5 || !std::equal(std::begin(prefix), std::end(prefix), applied.begin()))
      o.fail("rule order does not start immersion, R6, R6, R6");
    for (std::size_t i = 4; i < applied.size(); ++i)
      if (applied[i] != RuleId::LeftImp) o.fail("expected only R5 after the R6 steps");
    Outcome proof = expect_proof("(p -> (q -> r)) -> ((p -> q) -> (p -> r))", 0);
    if (!proof.passed) o.fail(proof.detail);
    return o;
  }

  Outcome expect_class(const char* text, ModalClass expected) const {
    Outcome o;
    auto tree = build(text);
    auto v = classify(tree);
    if (v.modal != expected)
      o.fail(std::string(text) + " classified " + to_string(v.modal) + ", expected " +
             to_string(expected));
    if (expected == ModalClass::Contradiction && v.deconstruction == Deconstruction::None)
      o.fail(std::string(text) + " lacks a deconstruction label");
    return o;
  }

  Outcome vocabulary() const {
    Outcome o;
    const std::pair<const char*, ModalClass> cases[] = {
        {"t -> ((t -> p) -> ~(p -> f))", ModalClass::Tautology},
        {"t -> (~(p -> f) -> (t -> p))", ModalClass::Tautology},
        {"(t -> p) & (p -> f)", ModalClass::Contradiction},
        {"((t -> p) & (p -> f)) -> f", ModalClass::Tautology},
    };
    for (const auto& [text, expected] : cases) {
      Outcome one = expect_class(text, expected);
      if (!one.passed) o.fail(one.detail);
    }
    return o;
  }

  Outcome liar() const {
    Outcome o = expect_class("t -> (((t -> p) & (p -> f)) | f)", ModalClass::Contradiction);
    for (const char* text : {"t -> ((t -> f) | f)", "t -> (t -> f)", "t -> f", "f | f"})
      if (evaluate(parse(text), {})) o.fail(std::string("chain member holds: ") + text);
    return o;
  }

  std::vector<Formula> suite() const {
    RandomFormulaGenerator gen(options_.seed);
    std::vector<Formula> out;
    for (std::size_t i = 0; i < options_.random_formulas; ++i) out.push_back(gen.next());
    return out;
  }

  Outcome agreement() const {
    Outcome o;
    for (const auto& f : suite()) {
      auto tree = build(f);
      auto v = classify(tree);
      if (v.modal != truth_table_class(f)) {
        o.fail("class mismatch on " + render(f));
        continue;
      }
      if (!equivalent(ccnf_formula(ccnf_of(tree)), f)) o.fail("CCNF differs from " + render(f));
      if (v.model_total && !evaluate(f, *v.model_total)) o.fail("model fails " + render(f));
      if (v.counterexample && evaluate(f, *v.counterexample))
        o.fail("counterexample holds for " + render(f));
    }
    return o;
  }

  Outcome node_audit() const {
    Outcome o;
    auto formulas = suite();
    if (formulas.size() > options_.audited_formulas)
      formulas.erase(formulas.begin() + static_cast<std::ptrdiff_t>(options_.audited_formulas),
                     formulas.end());
    for (const auto& f : formulas) {
      auto tree = build(f);
      for (const auto& n : tree.nodes) {
        if (n.children.empty()) continue;
        std::vector<Sequent> children;
        for (std::size_t id : n.children) children.push_back(tree.node(id).sequent);
        if (!equivalent(to_formula(n.sequent), conjunction_of(children)))
          o.fail("node " + std::to_string(n.id) + " of " + render(f) + " not equivalent");
      }
    }
    return o;
  }

  Outcome termination() const {
    Outcome o;
    for (const auto& f : suite()) {
      auto tree = build(f);
      for (const auto& n : tree.nodes) {
        if (!n.rule || *n.rule == RuleId::Immersion || *n.rule == RuleId::Flatten) continue;
        for (std::size_t id : n.children)
          if (tree.node(id).sequent.connective_count() >= n.sequent.connective_count())
            o.fail("measure does not decrease below node " + std::to_string(n.id) + " of " +
                   render(f));
      }
    }
    for (const char* text : {"p -> (q -> p)", "(p -> (q -> r)) -> ((p -> q) -> (p -> r))",
                             "t -> (((t -> p) & (p -> f)) | f)", "(t -> p) & (p -> f)"}) {
      if (to_json(build(text)).dump() != to_json(build(text)).dump())
        o.fail(std::string("nondeterministic tree for ") + text);
    }
    return o;
  }

  const SelfcheckOptions& options_;
  BuildOptions build_;
};

}  // namespace

std::vector<CriterionResult> run_selfcheck(const SelfcheckOptions& options) {
  return Checker(options).run();
}

}  // namespace ccbl
