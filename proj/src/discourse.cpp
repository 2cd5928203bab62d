#include "ccbl/discourse.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

#include "ccbl/syntax.hpp"

namespace ccbl {

const char* rule_tag(RuleId rule) {
  switch (rule) {
    case RuleId::Immersion: return "immersion";
    case RuleId::RightAnd: return "R1";
    case RuleId::LeftOr: return "R2";
    case RuleId::LeftNot: return "R3";
    case RuleId::RightNot: return "R4";
    case RuleId::LeftImp: return "R5";
    case RuleId::RightImp: return "R6";
    case RuleId::Flatten: return "flatten";
  }
  return "?";
}

const char* rule_name(RuleId rule) {
  switch (rule) {
    case RuleId::Immersion: return "immersion";
    case RuleId::RightAnd: return "right-side conjunction elimination";
    case RuleId::LeftOr: return "left-side disjunction elimination";
    case RuleId::LeftNot: return "left-side negation elimination";
    case RuleId::RightNot: return "right-side negation elimination";
    case RuleId::LeftImp: return "left-side implication elimination";
    case RuleId::RightImp: return "right-side implication elimination";
    case RuleId::Flatten: return "flattening";
  }
  return "?";
}

bool is_branching(RuleId rule) {
  return rule == RuleId::RightAnd || rule == RuleId::LeftOr || rule == RuleId::LeftImp;
}

bool targets_hypothesis(RuleId rule) {
  return rule == RuleId::LeftOr || rule == RuleId::LeftNot || rule == RuleId::LeftImp;
}

const char* to_string(Deconstruction d) {
  switch (d) {
    case Deconstruction::None: return "none";
    case Deconstruction::IrreconcilableLeaves: return "irreconcilable leaves";
    case Deconstruction::NonLogicalLeaf: return "non-logical leaf";
  }
  return "?";
}

namespace {

std::optional<RuleId> conclusion_rule(const Formula& f) {
  switch (f.kind()) {
    case Connective::And: return RuleId::RightAnd;
    case Connective::Not: return RuleId::RightNot;
    case Connective::Implies: return RuleId::RightImp;
    case Connective::Iff: throw std::invalid_argument("<-> must be desugared before expansion");
    default: return std::nullopt;
  }
}

std::optional<RuleId> hypothesis_rule(const Formula& f) {
  switch (f.kind()) {
    case Connective::Or: return RuleId::LeftOr;
    case Connective::Not: return RuleId::LeftNot;
    case Connective::Implies: return RuleId::LeftImp;
    case Connective::Iff: throw std::invalid_argument("<-> must be desugared before expansion");
    default: return std::nullopt;
  }
}

}  // namespace

std::optional<RuleApplication> applicable_rule(const Sequent& s) {
  for (bool branching : {false, true}) {
    for (std::size_t i = 0; i < s.conclusions.size(); ++i) {
      auto rule = conclusion_rule(s.conclusions[i]);
      if (rule && is_branching(*rule) == branching) return RuleApplication{*rule, i};
    }
    for (std::size_t i = 0; i < s.hypotheses.size(); ++i) {
      auto rule = hypothesis_rule(s.hypotheses[i]);
      if (rule && is_branching(*rule) == branching) return RuleApplication{*rule, i};
    }
  }
  return std::nullopt;
}

namespace {

template <typename T>
std::vector<T> erased(const std::vector<T>& v, std::size_t index) {
  std::vector<T> out = v;
  out.erase(out.begin() + static_cast<std::ptrdiff_t>(index));
  return out;
}

template <typename T>
std::vector<T> replaced(const std::vector<T>& v, std::size_t index, T value) {
  std::vector<T> out = v;
  out[index] = std::move(value);
  return out;
}

template <typename T>
std::vector<T> appended(const std::vector<T>& v, T value) {
  std::vector<T> out = v;
  out.push_back(std::move(value));
  return out;
}

}  // namespace

std::vector<Sequent> expand_unflattened(const Sequent& s, RuleId rule, std::size_t target) {
  const auto& side = targets_hypothesis(rule) ? s.hypotheses : s.conclusions;
  if (target >= side.size())
    throw RuleNotApplicable(std::string(rule_tag(rule)) + ": target out of range");
  const Formula& f = side[target];
  auto require = [&](Connective kind) {
    if (f.kind() != kind)
      throw RuleNotApplicable(std::string(rule_tag(rule)) + " does not apply to " + render(f));
  };
  const auto& h = s.hypotheses;
  const auto& c = s.conclusions;
  switch (rule) {
    case RuleId::RightAnd:
      require(Connective::And);
      return {{h, replaced(c, target, f.lhs())}, {h, replaced(c, target, f.rhs())}};
    case RuleId::LeftOr:
      require(Connective::Or);
      return {{replaced(h, target, f.lhs()), c}, {replaced(h, target, f.rhs()), c}};
    case RuleId::LeftNot:
      require(Connective::Not);
      return {{erased(h, target), appended(c, f.lhs())}};
    case RuleId::RightNot:
      require(Connective::Not);
      return {{appended(h, f.lhs()), erased(c, target)}};
    case RuleId::LeftImp:
      require(Connective::Implies);
      return {{replaced(h, target, f.rhs()), c}, {erased(h, target), appended(c, f.lhs())}};
    case RuleId::RightImp:
      require(Connective::Implies);
      return {{appended(h, f.lhs()), replaced(c, target, f.rhs())}};
    case RuleId::Immersion:
    case RuleId::Flatten:
      break;
  }
  throw RuleNotApplicable(std::string(rule_tag(rule)) + " is not an expansion rule");
}

std::vector<Sequent> expand(const Sequent& s, RuleId rule, std::size_t target) {
  auto children = expand_unflattened(s, rule, target);
  for (auto& child : children) child = flatten(child);
  return children;
}

std::vector<std::size_t> DiscourseTree::leaf_ids() const {
  // Left to right, not creation order.
  std::vector<std::size_t> out;
  if (nodes.empty()) return out;
  std::vector<std::size_t> stack{root_id};
  while (!stack.empty()) {
    const DiscourseNode& n = nodes.at(stack.back());
    stack.pop_back();
    if (n.children.empty()) out.push_back(n.id);
    stack.insert(stack.end(), n.children.rbegin(), n.children.rend());
  }
  return out;
}

bool DiscourseTree::is_full() const {
  return std::all_of(nodes.begin(), nodes.end(), [](const DiscourseNode& n) {
    return !n.children.empty() || n.status.has_value();
  });
}

namespace {

class Builder {
 public:
  Builder(const Formula& f, const BuildOptions& options) : options_(options) {
    tree_.root_formula = f;
  }

  DiscourseTree run() {
    Sequent raw{{}, {tree_.root_formula}};
    std::size_t root = add_node(std::nullopt, raw);
    tree_.root_id = root;
    tree_.nodes[root].rule = RuleId::Immersion;
    pending_.push_back(add_child(root, raw));

    while (!pending_.empty()) {
      std::size_t id = pending_.back();
      pending_.pop_back();
      step(id);
    }

    auto& stats = tree_.stats;
    stats.nodes = tree_.nodes.size();
    for (const auto& n : tree_.nodes) {
      stats.depth = std::max(stats.depth, n.depth);
      if (n.children.empty()) ++stats.leaves;
    }
    return std::move(tree_);
  }

 private:
  std::size_t add_node(std::optional<std::size_t> parent, Sequent s) {
    if (tree_.nodes.size() >= options_.max_nodes) throw LimitExceeded(options_.max_nodes);
    DiscourseNode node;
    node.id = tree_.nodes.size();
    node.parent = parent;
    node.depth = parent ? tree_.nodes[*parent].depth + 1 : 0;
    node.sequent = std::move(s);
    tree_.nodes.push_back(std::move(node));
    if (parent) tree_.nodes[*parent].children.push_back(tree_.nodes.back().id);
    return tree_.nodes.back().id;
  }

  // Returns the node that continues the expansion.
  std::size_t add_child(std::size_t parent, const Sequent& raw) {
    Sequent flat = flatten(raw);
    if (!options_.explicit_flatten || flat == raw) return add_node(parent, std::move(flat));
    std::size_t id = add_node(parent, raw);
    tree_.nodes[id].rule = RuleId::Flatten;
    return add_node(id, std::move(flat));
  }

  void step(std::size_t id) {
    const Sequent s = tree_.nodes[id].sequent;
    if (options_.early_closure) {
      if (auto witness = tnd_witness(s)) {
        tree_.nodes[id].status = TndInstance{*witness};
        return;
      }
    }
    auto app = applicable_rule(s);
    if (!app) {
      tree_.nodes[id].status = leaf_status(s);
      return;
    }
    auto children = options_.expander ? options_.expander(s, app->rule, app->target)
                                      : expand_unflattened(s, app->rule, app->target);
    tree_.nodes[id].rule = app->rule;
    tree_.nodes[id].target = app->target;
    std::vector<std::size_t> ids;
    for (const auto& child : children) ids.push_back(add_child(id, child));
    pending_.insert(pending_.end(), ids.rbegin(), ids.rend());
  }

  const BuildOptions& options_;
  DiscourseTree tree_;
  std::vector<std::size_t> pending_;
};

}  // namespace

DiscourseTree build_discourse(const Formula& f, const BuildOptions& options) {
  if (contains_iff(f)) throw std::invalid_argument("<-> must be desugared before expansion");
  return Builder(f, options).run();
}

namespace {

Assignment zero_assignment(const Formula& f) {
  Assignment a;
  for (const auto& v : variables(f)) a[v] = false;
  return a;
}

}  // namespace

Verdict classify(const DiscourseTree& tree) {
  Verdict verdict;
  std::vector<std::size_t> tnd, open, empty;
  for (std::size_t id : tree.leaf_ids()) {
    const auto& status = tree.node(id).status;
    if (!status) throw NotFull();
    if (std::holds_alternative<TndInstance>(*status))
      tnd.push_back(id);
    else if (std::holds_alternative<OpenClause>(*status))
      open.push_back(id);
    else
      empty.push_back(id);
  }

  if (open.empty() && empty.empty()) {
    verdict.modal = ModalClass::Tautology;
    verdict.evidence_leaves = std::move(tnd);
    return verdict;
  }
  if (!empty.empty()) {
    verdict.modal = ModalClass::Contradiction;
    verdict.deconstruction = Deconstruction::NonLogicalLeaf;
    verdict.evidence_leaves = std::move(empty);
    return verdict;
  }

  std::vector<Clause> clauses;
  for (std::size_t id : open) clauses.push_back(std::get<OpenClause>(*tree.node(id).status).clause);
  auto model = sat(clauses, std::numeric_limits<std::size_t>::max());
  if (!model) {
    verdict.modal = ModalClass::Contradiction;
    verdict.deconstruction = Deconstruction::IrreconcilableLeaves;
    verdict.evidence_leaves = std::move(open);
    return verdict;
  }

  verdict.modal = ModalClass::ContextualTruth;
  Assignment total = zero_assignment(tree.root_formula);
  for (const auto& [name, value] : *model) total[name] = value;
  if (!evaluate(tree.root_formula, total))
    throw std::logic_error("model does not satisfy " + render(tree.root_formula));

  const std::size_t leaf = open.front();
  Assignment counter = zero_assignment(tree.root_formula);
  for (const auto& h : tree.node(leaf).sequent.hypotheses)
    if (h.kind() == Connective::Var) counter[h.name()] = true;
  if (evaluate(tree.root_formula, counter))
    throw std::logic_error("counterexample does not falsify " + render(tree.root_formula));

  verdict.model = std::move(*model);
  verdict.model_total = std::move(total);
  verdict.counterexample = std::move(counter);
  verdict.counterexample_leaf = leaf;
  verdict.evidence_leaves = std::move(open);
  return verdict;
}

std::vector<TranscriptStep> transcript(const DiscourseTree& tree) {
  std::vector<TranscriptStep> steps;
  if (tree.nodes.empty()) return steps;
  // Iterative post-order: a node is emitted once all its children are.
  std::vector<std::pair<std::size_t, bool>> stack{{tree.root_id, false}};
  while (!stack.empty()) {
    auto [id, visited] = stack.back();
    stack.pop_back();
    const auto& node = tree.node(id);
    if (!visited && !node.children.empty()) {
      stack.push_back({id, true});
      for (auto it = node.children.rbegin(); it != node.children.rend(); ++it)
        stack.push_back({*it, false});
      continue;
    }
    TranscriptStep step;
    step.node_id = id;
    if (node.children.empty()) {
      if (!node.status) throw NotFull();
      if (std::holds_alternative<TndInstance>(*node.status)) {
        step.kind = StepKind::Axiom;
        step.text = render(node.sequent);
      } else if (auto* open = std::get_if<OpenClause>(&*node.status)) {
        step.kind = StepKind::OpenLeaf;
        step.text = render(node.sequent) + "  [clause " + render(open->clause) + "]";
      } else {
        step.kind = StepKind::EmptyLeaf;
        step.text = render(node.sequent) + "  [empty clause]";
      }
    } else {
      step.kind = StepKind::Introduction;
      step.rule = node.rule;
      step.premises = node.children;
      step.text = id == tree.root_id ? render(tree.root_formula) : render(node.sequent);
    }
    steps.push_back(std::move(step));
  }
  return steps;
}

std::string render_transcript(const std::vector<TranscriptStep>& steps) {
  std::ostringstream out;
  std::size_t n = 1;
  for (const auto& step : steps) {
    std::string label;
    switch (step.kind) {
      case StepKind::Axiom: label = "axiom"; break;
      case StepKind::OpenLeaf: label = "open leaf"; break;
      case StepKind::EmptyLeaf: label = "empty leaf"; break;
      case StepKind::Introduction: label = std::string(rule_tag(*step.rule)) + "-intro"; break;
    }
    out << n++ << ". #" << step.node_id << ' ' << label << "  " << step.text;
    if (!step.premises.empty()) {
      out << "  from";
      for (std::size_t p : step.premises) out << " #" << p;
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace ccbl
