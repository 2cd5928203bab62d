#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "ccbl/ccnf.hpp"
#include "ccbl/discourse.hpp"
#include "ccbl/oracle.hpp"
#include "ccbl/sequent.hpp"

namespace ccbl {

using Json = nlohmann::ordered_json;

/// {"hyp": [...], "con": [...]} with members in canonical text.
Json to_json(const Sequent& s);
Json to_json(const LeafStatus& status);
Json to_json(const Assignment& a);
Json to_json(const DiscourseTree& tree);
Json to_json(const Verdict& v);
Json to_json(const Ccnf& c);
Json to_json(const std::vector<SchemaCheck>& report);

/// One digraph; TND leaves bold, open-clause leaves boxed, empty-clause leaves
/// filled.
std::string to_dot(const DiscourseTree& tree);

/// Indented listing, one node per line, children under their parent.
std::string to_text(const DiscourseTree& tree);

/// `p=0 q=1`, or `(any)` for the empty assignment.
std::string render(const Assignment& a);

}  // namespace ccbl
