#include "ccbl/export.hpp"

#include <sstream>

#include "ccbl/syntax.hpp"

namespace ccbl {

Json to_json(const Sequent& s) {
  Json hyp = Json::array(), con = Json::array();
  for (const auto& h : s.hypotheses) hyp.push_back(render(h));
  for (const auto& c : s.conclusions) con.push_back(render(c));
  return Json{{"hyp", std::move(hyp)}, {"con", std::move(con)}};
}

Json to_json(const LeafStatus& status) {
  if (const auto* tnd = std::get_if<TndInstance>(&status))
    return Json{{"kind", "tnd"}, {"witness", render(tnd->witness)}};
  if (const auto* open = std::get_if<OpenClause>(&status)) {
    Json lits = Json::array();
    for (const auto& l : open->clause) lits.push_back((l.positive ? "" : "~") + l.variable);
    return Json{{"kind", "open"}, {"clause", std::move(lits)}};
  }
  return Json{{"kind", "empty"}};
}

Json to_json(const Assignment& a) {
  Json out = Json::object();
  for (const auto& [name, value] : a) out[name] = value ? 1 : 0;
  return out;
}

Json to_json(const DiscourseTree& tree) {
  Json nodes = Json::array();
  for (const auto& n : tree.nodes) {
    Json node{{"id", n.id}, {"sequent", to_json(n.sequent)}};
    node["rule"] = n.rule ? Json(rule_tag(*n.rule)) : Json(nullptr);
    node["target"] = n.target ? Json(*n.target) : Json(nullptr);
    node["children"] = n.children;
    node["status"] = n.status ? to_json(*n.status) : Json(nullptr);
    nodes.push_back(std::move(node));
  }
  return Json{{"formula", render(tree.root_formula)},
              {"root", tree.root_id},
              {"stats",
               {{"nodes", tree.stats.nodes},
                {"depth", tree.stats.depth},
                {"leaves", tree.stats.leaves}}},
              {"nodes", std::move(nodes)}};
}

Json to_json(const Verdict& v) {
  Json out{{"class", to_string(v.modal)}};
  if (v.modal == ModalClass::Contradiction) out["deconstruction"] = to_string(v.deconstruction);
  out["evidence_leaves"] = v.evidence_leaves;
  if (v.model) out["model"] = to_json(*v.model);
  if (v.counterexample) out["counterexample"] = to_json(*v.counterexample);
  if (v.counterexample_leaf) out["counterexample_leaf"] = *v.counterexample_leaf;
  return out;
}

Json to_json(const Ccnf& c) {
  Json clauses = Json::array();
  for (const auto& clause : c.clauses) {
    Json lits = Json::array();
    for (const auto& l : clause.literals) lits.push_back((l.positive ? "" : "~") + l.variable);
    clauses.push_back(
        Json{{"leaf", clause.leaf_id}, {"literals", std::move(lits)}, {"tautological", clause.tautological}});
  }
  return Json{{"formula", render(c.source)}, {"clauses", std::move(clauses)}};
}

Json to_json(const std::vector<SchemaCheck>& report) {
  Json out = Json::array();
  for (const auto& s : report)
    out.push_back(
        Json{{"name", s.name}, {"formula", s.formula}, {"rows", s.rows}, {"tautology", s.tautology}});
  return out;
}

namespace {

std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

std::string node_label(const DiscourseTree& tree, const DiscourseNode& n) {
  if (n.id == tree.root_id) return render(tree.root_formula);
  return render(n.sequent);
}

}  // namespace

std::string to_dot(const DiscourseTree& tree) {
  std::ostringstream out;
  out << "digraph discourse {\n  node [shape=plaintext, fontname=\"Helvetica\"];\n";
  for (const auto& n : tree.nodes) {
    out << "  n" << n.id << " [label=\"" << dot_escape(node_label(tree, n)) << '"';
    if (n.status) {
      if (std::holds_alternative<TndInstance>(*n.status))
        out << ", style=bold, fontname=\"Helvetica-Bold\"";
      else if (std::holds_alternative<OpenClause>(*n.status))
        out << ", shape=box";
      else
        out << ", shape=box, style=filled, fillcolor=lightgrey";
    }
    out << "];\n";
  }
  for (const auto& n : tree.nodes)
    for (std::size_t child : n.children)
      out << "  n" << n.id << " -> n" << child << " [label=\"" << rule_tag(*n.rule) << "\"];\n";
  out << "}\n";
  return out.str();
}

std::string to_text(const DiscourseTree& tree) {
  std::ostringstream out;
  std::vector<std::size_t> stack{tree.root_id};
  while (!stack.empty()) {
    const auto& n = tree.node(stack.back());
    stack.pop_back();
    out << std::string(2 * n.depth, ' ') << '#' << n.id << ' ' << node_label(tree, n);
    if (n.rule) {
      out << "  [" << rule_tag(*n.rule);
      if (n.target)
        out << " on " << (targets_hypothesis(*n.rule) ? "hypothesis " : "conclusion ") << *n.target;
      out << ']';
    } else if (n.status) {
      if (std::holds_alternative<TndInstance>(*n.status))
        out << "  TND";
      else if (const auto* open = std::get_if<OpenClause>(&*n.status))
        out << "  open: " << render(open->clause);
      else
        out << "  empty clause";
    }
    out << '\n';
    for (auto it = n.children.rbegin(); it != n.children.rend(); ++it) stack.push_back(*it);
  }
  return out.str();
}

std::string render(const Assignment& a) {
  if (a.empty()) return "(any)";
  std::string out;
  for (const auto& [name, value] : a) {
    if (!out.empty()) out += ' ';
    out += name + '=' + (value ? '1' : '0');
  }
  return out;
}

}  // namespace ccbl
