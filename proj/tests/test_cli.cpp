#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <json.hpp>
#include <string>

namespace {

struct Run {
  int code = -1;
  std::string out;
};

std::string quoted(const std::string& s) {
  std::string q = "'";
  for (char c : s) q += c == '\'' ? std::string("'\\''") : std::string(1, c);
  return q + "'";
}

Run run(const std::string& args, const std::string& env = "") {
  std::string cmd = env + " " + quoted(CCBL_CLI) + " " + args + " 2>&1";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe);
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::size_t count(const std::string& hay, const std::string& needle) {
  std::size_t n = 0;
  for (auto pos = hay.find(needle); pos != std::string::npos; pos = hay.find(needle, pos + 1)) ++n;
  return n;
}

}  // namespace

TEST_CASE("classify exit codes and verdict lines") {
  auto taut = run("classify 'p -> (q -> p)'");
  CHECK(taut.code == 0);
  CHECK(taut.out.rfind("TAUTOLOGY (deductive proof,", 0) == 0);

  auto ct = run("classify 'p -> q'");
  CHECK(ct.code == 1);
  CHECK(ct.out.rfind("CONTEXTUAL TRUTH; model p=0; counterexample p=1 q=0\n", 0) == 0);

  auto contra = run("classify '(t -> p) & (p -> f)'");
  CHECK(contra.code == 2);
  CHECK(contra.out.rfind("CONTRADICTION (deconstruction)\n", 0) == 0);
  CHECK(contra.out.find("irreconcilable") != std::string::npos);

  auto bad = run("classify 'p &'");
  CHECK(bad.code == 64);
  CHECK(bad.out.find("offset 3") != std::string::npos);
  CHECK(bad.out.find("     ^") != std::string::npos);

  CHECK(run("classify").code == 64);
  CHECK(run("classify --file /nonexistent/formulas.txt").code == 66);
  CHECK(run("frobnicate").code == 64);
}

TEST_CASE("classify --json") {
  auto r = run("classify 'p <-> p' --json");
  CHECK(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j.is_object());
}

TEST_CASE("tree formats") {
  auto json = run("tree p --format json");
  REQUIRE(json.code == 0);
  auto j = nlohmann::json::parse(json.out);
  CHECK(j["stats"]["nodes"] == 2);
  CHECK(j["nodes"].size() == 2);
  CHECK(j["nodes"][0]["rule"] == "immersion");
  CHECK(j["nodes"][1]["status"]["kind"] == "open");

  auto dot = run("tree 'p | ~p' --format dot");
  CHECK(dot.code == 0);
  CHECK(dot.out.rfind("digraph discourse {", 0) == 0);
  CHECK(count(dot.out, "style=bold") == 1);

  auto text = run("tree 'p | ~p' --transcript");
  CHECK(text.out.find("TND") != std::string::npos);
  CHECK(text.out.find("3. #0 immersion-intro") != std::string::npos);

  CHECK(run("tree 'p' --format svg").code == 64);
}

TEST_CASE("cnf") {
  CHECK(run("cnf 'p & ~p' --dimacs").out == "p cnf 1 2\n1 0\n-1 0\n");
  CHECK(run("cnf '(p | ~p) & q' --dimacs --prune-tautologies").out == "p cnf 1 1\n1 0\n");
  CHECK(run("cnf 'p -> q'").out == "(p -> q) <-> (t -> ~p | q)\n");
}

TEST_CASE("selfcheck") {
  auto r = run("selfcheck --json");
  CHECK(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["passed"] == true);
  CHECK(j["criteria"].size() == 8);
}

TEST_CASE("batch") {
  const std::string path = "ccbl_cli_batch.txt";
  {
    std::ofstream f(path);
    f << "# comment\n\np -> p\np & ~p\n  p -> q  \n";
  }
  auto ok = run("batch " + path + " --jobs 2");
  CHECK(ok.code == 0);
  CHECK(ok.out ==
        "3: TAUTOLOGY (deductive proof, 1 leaf)\n"
        "4: CONTRADICTION (deconstruction)\n"
        "5: CONTEXTUAL TRUTH; model p=0; counterexample p=1 q=0\n");
  {
    std::ofstream f(path, std::ios::app);
    f << "p &\n";
  }
  auto bad = run("batch " + path);
  CHECK(bad.code == 65);
  CHECK(bad.out.find("6: ERROR") != std::string::npos);
  std::remove(path.c_str());
}

TEST_CASE("node limit from the environment") {
  auto r = run("classify '(p -> (q -> r)) -> ((p -> q) -> (p -> r))'", "CBL_MAX_NODES=3");
  CHECK(r.code == 70);
  CHECK(r.out.find("exceeded") != std::string::npos);
}
