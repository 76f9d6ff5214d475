#include <algorithm>
#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "msv/cli.hpp"

using namespace msv;
using nlohmann::json;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream is(text);
  for (std::string line; std::getline(is, line);) out.push_back(line);
  return out;
}

}  // namespace

TEST_CASE("classify [2,4,1,3]") {
  const Run r = run({"classify", "[2,4,1,3]"});
  CHECK(r.code == 0);
  const json j = json::parse(r.out);
  CHECK(j["schema_version"] == "1");
  CHECK(j["input"] == "[2,4,1,3]");
  const json& c = j["classification"];
  CHECK(c["toric"] == true);
  CHECK(c["complexity"] == 0);
  CHECK(c["rigid"] == false);
  CHECK(c["method_verdicts"]["oracle"] == false);
  CHECK(c["method_verdicts"]["corollary"].is_null());
  CHECK_FALSE(j.contains("timings"));
}

TEST_CASE("classify keeps a stable key order") {
  const std::string text = run({"classify", "[1,3,2]", "--timings"}).out;
  std::vector<std::size_t> at;
  for (const char* key : {"\"schema_version\"", "\"input\"", "\"classification\"", "\"n\"", "\"toric\"",
                          "\"complexity\"", "\"rigid\"", "\"method_verdicts\"", "\"components\"", "\"timings\""}) {
    at.push_back(text.find(key));
  }
  CHECK(std::is_sorted(at.begin(), at.end()));
  CHECK(at.back() != std::string::npos);
}

TEST_CASE("classify a non-toric permutation exits 3 with a report") {
  const Run r = run({"classify", "[2,1,4,3]"});
  CHECK(r.code == 3);
  const json c = json::parse(r.out)["classification"];
  CHECK(c["toric"] == false);
  CHECK(c["complexity"] == 2);
  CHECK(c["rigid"].is_null());
}

TEST_CASE("classify [1,10,8,7,6,9,4,5,2,3]") {
  const Run r = run({"classify", "[1,10,8,7,6,9,4,5,2,3]", "--faces"});
  CHECK(r.code == 0);
  const json j = json::parse(r.out);
  CHECK(j["classification"]["rigid"] == false);
  const json& comp = j["classification"]["components"][0];
  bool witness = false;
  for (const auto& w : comp["patterns"]) {
    if (w["kind"] == "adjacent" && w["cells"][1] == json::array({7, 3})) witness = true;
  }
  CHECK(witness);
  bool non_simplicial = false;
  for (const auto& f : j["faces"]) {
    if (f["simplicial"] == false && f["rays"].size() == 4) non_simplicial = true;
  }
  CHECK(non_simplicial);
}

TEST_CASE("classify options") {
  CHECK(json::parse(run({"classify", "[2,4,1,3]", "--timings"}).out).contains("timings"));
  CHECK(json::parse(run({"classify", "[2,4,1,3]", "--diagrams"}).out)["diagrams"]["rothe"] == "##*.\n*...\n.#.*\n.*..\n");
  const Run text = run({"classify", "[2,4,1,3]", "--text"});
  CHECK(text.code == 0);
  CHECK(text.out.find("rigid       not rigid") != std::string::npos);
  const Run graph_only = run({"classify", "[2,4,1,3]", "--methods", "graph"});
  const json v = json::parse(graph_only.out)["classification"]["method_verdicts"];
  CHECK(v.size() == 1);
  CHECK(v["graph"] == false);
}

TEST_CASE("usage errors exit 2") {
  CHECK(run({"classify", "[1,1]"}).code == 2);
  CHECK(run({"classify", "[2,4,1,3]", "--methods", "nope"}).code == 2);
  CHECK(run({"classify", "[2,4,1,3]", "--json", "--text"}).code == 2);
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"scan", "--n", "9"}).code == 2);
  CHECK(run({"scan", "--n", "1"}).code == 2);
  CHECK(run({"scan", "--n", "3", "--filter", "odd"}).code == 2);
  CHECK(run({"crosscheck", "--n", "8"}).code == 2);
  CHECK(run({"render", "--perm", "[1,2", "--what", "rothe"}).code == 2);
  CHECK(run({"render", "--perm", "[1,2]", "--what", "svg"}).code == 2);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("scan") {
  SUBCASE("S_2 is all trivial") {
    const Run r = run({"scan", "--n", "2"});
    CHECK(r.code == 0);
    const auto ls = lines(r.out);
    REQUIRE(ls.size() == 2);
    for (const auto& l : ls) {
      const json c = json::parse(l)["classification"];
      CHECK(c["toric"] == true);
      CHECK(c["trivial"] == true);
    }
    CHECK(json::parse(ls[0])["input"] == "[1,2]");
  }
  SUBCASE("S_3 summary") {
    const json s = json::parse(run({"scan", "--n", "3", "--summary", "--json"}).out);
    CHECK(s["permutations"] == 6);
    CHECK(s["toric"] == 6);
    CHECK(s["non_rigid"] == 1);
    CHECK(s["disagreement"] == 0);
  }
  SUBCASE("no disagreement in S_5") {
    const Run r = run({"scan", "--n", "5", "--filter", "disagreement"});
    CHECK(r.code == 0);
    CHECK(r.out.empty());
  }
  SUBCASE("filters") {
    CHECK(lines(run({"scan", "--n", "4", "--filter", "toric"}).out).size() == 22);
    CHECK(lines(run({"scan", "--n", "3", "--filter", "nonrigid"}).out).size() == 1);
  }
  SUBCASE("worker count does not change the output") {
    const std::string one = run({"scan", "--n", "5", "--jobs", "1"}).out;
    CHECK(run({"scan", "--n", "5", "--jobs", "4"}).out == one);
    CHECK(lines(one).size() == 120);
  }
}

TEST_CASE("render") {
  CHECK(run({"render", "--perm", "[2,1,4,3]", "--what", "rothe"}).out == "#*..\n*...\n..#*\n..*.\n");
  const std::string plain = run({"render", "--perm", "[1,2,3]", "--what", "rothe"}).out;
  CHECK(plain.find('#') == std::string::npos);
  CHECK(plain == "*..\n.*.\n..*\n");
  CHECK(run({"render", "--perm", "[2,1,4,3]", "--what", "regions"}).out == "E*P.\n*PP.\nPPE*\n..*.\n");
  const std::string dot = run({"render", "--perm", "[2,4,1,3]", "--what", "graph-dot"}).out;
  std::size_t edges = 0;
  for (std::size_t pos = dot.find(" -- "); pos != std::string::npos; pos = dot.find(" -- ", pos + 1)) ++edges;
  CHECK(edges == 4);
}

TEST_CASE("crosscheck") {
  const Run ok = run({"crosscheck", "--n", "4", "--deep"});
  CHECK(ok.code == 0);
  CHECK(ok.out.find("ok") != std::string::npos);
  for (const char* fault : {"ray-sign", "corollary-off-by-one"}) {
    const Run bad = run({"crosscheck", "--n", "4", "--inject-fault", fault});
    CAPTURE(fault);
    CHECK(bad.code == 1);
    CHECK(bad.out.find("FAIL") != std::string::npos);
    CHECK(bad.out.find("permutation [") != std::string::npos);
  }
}
