#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ccbl/ccnf.hpp"
#include "ccbl/random_formula.hpp"
#include "ccbl/syntax.hpp"
#include "support/brute.hpp"

using namespace ccbl;

namespace {

Ccnf ccnf_text(const char* text) { return ccnf_of(build_discourse(parse(text))); }

}  // namespace

TEST_CASE("ccnf_of") {
  auto contra = ccnf_text("p & ~p");
  REQUIRE(contra.clauses.size() == 2);
  CHECK(contra.clauses[0].literals == Clause{{"p", true}});
  CHECK(contra.clauses[1].literals == Clause{{"p", false}});
  CHECK_FALSE(contra.clauses[0].tautological);

  auto tnd = ccnf_text("p | ~p");
  REQUIRE(tnd.clauses.size() == 1);
  CHECK(tnd.clauses[0].tautological);
  CHECK(tnd.clauses[0].literals == Clause{{"p", true}, {"p", false}});

  auto constant = ccnf_text("p | t");
  REQUIRE(constant.clauses.size() == 1);
  CHECK(constant.clauses[0].tautological);
  CHECK(constant.clauses[0].literals.empty());
}

TEST_CASE("clauses carry their leaf ids") {
  auto tree = build_discourse(parse("(p -> q) & (q -> r)"));
  auto c = ccnf_of(tree);
  auto leaves = tree.leaf_ids();
  REQUIRE(c.clauses.size() == leaves.size());
  for (std::size_t i = 0; i < leaves.size(); ++i) CHECK(c.clauses[i].leaf_id == leaves[i]);
}

TEST_CASE("summary text") {
  CHECK(render_summary(ccnf_text("p & ~p")) == "(p & ~p) <-> (t -> p) & (t -> ~p)");
  CHECK(render_summary(ccnf_text("p | ~p")) == "(p | ~p) <-> (t -> p | ~p)");
  CHECK(render_summary(ccnf_text("p -> q")) == "(p -> q) <-> (t -> ~p | q)");
  CHECK(render_summary(ccnf_text("t -> f")) == "(t -> f) <-> (t -> f)");
}

TEST_CASE("dimacs") {
  CHECK(export_dimacs(ccnf_text("p & ~p")) == "p cnf 1 2\n1 0\n-1 0\n");
  CHECK(export_dimacs(ccnf_text("p -> q")) == "p cnf 2 1\n-1 2 0\n");
  CHECK(export_dimacs(ccnf_text("p & ~q")) == "p cnf 2 2\n1 0\n-2 0\n");
  CHECK(export_dimacs(ccnf_text("p | ~q")) == "p cnf 2 1\n-1 2 0\n");
  Ccnf direct{parse("p | ~q"), {{{{"p", true}, {"q", false}}, false, 0}}};
  CHECK(export_dimacs(direct) == "p cnf 2 1\n1 -2 0\n");
  CHECK(export_dimacs(ccnf_text("t")) == "p cnf 0 0\n");
  CHECK(export_dimacs(ccnf_text("t -> f")) == "p cnf 0 1\n0\n");
}

TEST_CASE("pruning drops tautological clauses") {
  auto c = ccnf_text("(p | ~p) & q");
  CHECK(export_dimacs(c) == "p cnf 2 2\n1 -1 0\n2 0\n");
  CHECK(export_dimacs(c, true) == "p cnf 1 1\n1 0\n");
}

TEST_CASE("ccnf is equivalent to its source") {
  RandomFormulaGenerator gen(41);
  for (int i = 0; i < 500; ++i) {
    Formula f = gen.next();
    auto c = ccnf_of(build_discourse(f));
    CAPTURE(render(f));
    CHECK(brute::equivalent(ccnf_formula(c), f));
    // Non-tautological clauses alone decide satisfiability.
    std::vector<Clause> open;
    for (const auto& cl : c.clauses)
      if (!cl.tautological) open.push_back(cl.literals);
    CHECK(brute::satisfiable(open) == (brute::modal_class(f) != ModalClass::Contradiction));
  }
}
