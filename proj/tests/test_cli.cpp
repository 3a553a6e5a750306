#include <doctest.h>

#include <sstream>

#include <json.hpp>

#include "preclusion/cli.hpp"
#include "preclusion/report.hpp"

using namespace preclusion;
using nlohmann::json;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(const std::vector<std::string>& args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run(args, in, out, err);
  return {code, out.str(), err.str()};
}

json report_of(const Run& r) { return json::parse(r.out); }

}  // namespace

TEST_CASE("gen") {
  const Run q3 = run({"gen", "hypercube", "3", "--format", "edges"});
  CHECK(q3.code == 0);
  CHECK(q3.out.rfind("8 12\n", 0) == 0);
  CHECK(std::count(q3.out.begin(), q3.out.end(), '\n') == 13);

  const Run p = run({"gen", "petersen", "--format", "g6"});
  CHECK(p.code == 0);
  CHECK(p.out == "IheA@GUAo\n");

  CHECK(run({"gen", "hypercube", "0"}).code == 2);
  CHECK(run({"gen", "dodecahedron"}).code == 2);
  CHECK(run({"gen", "cycle", "x"}).code == 2);
  CHECK(run({"gen", "complete", "3", "--format", "dot"}).code == 2);

  const Run a = run({"gen", "random_bipartite", "4", "0.5", "--seed", "7"});
  const Run b = run({"gen", "random_bipartite", "4", "0.5", "--seed", "7"});
  CHECK(a.out == b.out);
}

TEST_CASE("solve") {
  const std::string q3 = run({"gen", "hypercube", "3"}).out;
  const Run mp = run({"solve", "--mode", "mp", "--deterministic"}, q3);
  CHECK(mp.code == 0);
  const json doc = report_of(mp);
  CHECK(doc["result"]["certificate"]["value"] == 3);
  CHECK(doc["outcome"] == "feasible");
  CHECK(doc["input"]["n"] == 8);

  const Run mps = run({"solve", "--mode", "mps", "--s", "2"}, q3);
  CHECK(mps.code == 0);
  CHECK(report_of(mps)["result"]["certificate"]["value"] == 4);

  const Run ak = run({"solve", "--mode", "ak"}, run({"gen", "cycle", "6"}).out);
  CHECK(ak.code == 1);
  CHECK(report_of(ak)["result"]["certificate"]["value"] == "INFINITY");

  const Run over = run({"solve", "--mode", "mp", "--budget", "2"}, q3);
  CHECK(over.code == 1);
  CHECK(report_of(over)["result"]["certificate"]["status"] == "over_budget");

  const Run brute = run({"solve", "--mode", "mp", "--method", "brute"}, q3);
  CHECK(brute.code == 0);
  CHECK(report_of(brute)["result"]["certificate"]["value"] == 3);

  CHECK(run({"solve", "--mode", "ak"}, run({"gen", "path", "3"}).out).code == 2);
  CHECK(run({"solve", "--mode", "mps"}, q3).code == 2);
  CHECK(run({"solve", "--mode", "mp", "--s", "1"}, q3).code == 2);
  CHECK(run({"solve", "--mode", "xx"}, q3).code == 2);
  CHECK(run({"solve", "--mode", "mp"}, "3 1\n0 9\n").code == 2);
  CHECK(run({"solve", "--mode", "mp", "/nonexistent/graph"}).code == 2);
  CHECK(run({"solve"}).code == 2);
}

TEST_CASE("solve report is independent of jobs") {
  const std::string q3 = run({"gen", "hypercube", "3"}).out;
  const json one = report_of(run({"solve", "--mode", "mps", "--s", "1", "--deterministic", "--jobs", "1"}, q3));
  const json four = report_of(run({"solve", "--mode", "mps", "--s", "1", "--deterministic", "--jobs", "4"}, q3));
  CHECK(without_timing(one) == without_timing(four));
}

TEST_CASE("reduce") {
  const Run k2 = run({"reduce"}, "2 1\n0 1\n");
  CHECK(k2.code == 0);
  const json doc = report_of(k2);
  CHECK(doc["result"]["gadget"]["n"] == 6);
  CHECK(doc["result"]["gadget"]["m"] == 7);
  CHECK(doc["result"]["labels"]["e"]["edge"] == json({3, 5}));
  CHECK(doc["result"]["labels"]["e_prime"]["edge"] == json({2, 4}));

  const Run check = run({"reduce", "--check", "1"}, "2 1\n0 1\n");
  CHECK(check.code == 0);
  CHECK(report_of(check)["result"]["check"]["agree"] == true);

  CHECK(run({"reduce"}, run({"gen", "cycle", "5"}).out).code == 2);
  CHECK(run({"reduce"}, run({"gen", "petersen"}).out).code == 2);
}

TEST_CASE("verify") {
  const Run h = run({"verify", "hypercube", "3", "2"});
  CHECK(h.code == 0);
  const json hd = report_of(h);
  CHECK(hd["result"]["pass"] == true);
  CHECK(hd["result"]["suites"][0]["result"]["certificate"]["value"] == 4);

  const Run l4 = run({"verify", "lemma4", "3"});
  CHECK(l4.code == 0);
  CHECK(report_of(l4)["result"]["suites"][0]["result"]["subsets_checked"] == 495);

  const Run fuzz = run({"verify", "reduction-fuzz", "42", "5"});
  CHECK(fuzz.code == 0);
  CHECK(report_of(fuzz)["result"]["suites"][0]["result"]["summary"] == "5/5 agree");

  const Run l5 = run({"verify", "lemma5", "3"});
  CHECK(l5.code == 1);
  const json l5r = report_of(l5)["result"]["suites"][0]["result"];
  CHECK(l5r["literal_form"]["counterexample_reproduced"] == true);
  CHECK(l5r["corrected_form"]["failures"] == 3);

  CHECK(run({"verify", "lemma4", "5"}).code == 2);
  CHECK(run({"verify", "hypercube", "3"}).code == 2);
  CHECK(run({"verify", "nope"}).code == 2);
  CHECK(run({"verify", "chain", "1", "2", "3"}).code == 2);
}

TEST_CASE("bench and misc") {
  const Run csv = run({"bench", "--max-n", "3"});
  CHECK(csv.code == 0);
  CHECK(csv.out.rfind("graph,n,m,kind,value,nodes,prunes,seconds\n", 0) == 0);
  CHECK(run({"bench", "--max-n", "9"}).code == 2);
  CHECK(run({"--version"}).out == std::string(kToolVersion) + "\n");
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
}
