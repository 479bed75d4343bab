#include <doctest.h>

#include <cstdlib>
#include <sstream>

#include "gk/cli.hpp"
#include "gk/exact_arith.hpp"
#include "gk/report.hpp"

using namespace gk;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("order in text and structured form") {
  const Run text = run({"order", "--family", "C", "--rank", "5", "--q", "2"});
  CHECK(text.code == 0);
  CHECK(text.out.find("2^25·3^6·5^2·7·11·17·31") != std::string::npos);

  const Run structured = run({"order", "--family", "C", "--rank", "5", "--q", "2", "--format", "structured"});
  REQUIRE(structured.code == 0);
  const auto j = nlohmann::json::parse(structured.out);
  CHECK(j["schema"] == "gkcheck.order/1");
  CHECK(factorization_from_json(j["order"]) == Factorization::parse("2^25·3^6·5^2·7·11·17·31"));
}

TEST_CASE("order for alternating, sporadic and exceptional groups") {
  CHECK(run({"order", "--family", "Alt", "--degree", "5"}).out.find("value: 60") != std::string::npos);
  CHECK(run({"order", "--name", "M11"}).out.find("value: 7920") != std::string::npos);
  CHECK(run({"order", "--family", "2B2", "--q", "8"}).out.find("2^6·5·7·13") != std::string::npos);
}

TEST_CASE("degpat") {
  const Run r = run({"degpat", "--family", "C", "--rank", "5", "--q", "2"});
  CHECK(r.code == 0);
  CHECK(r.out == "2:4 3:5 5:3 7:3 11:1 17:2 31:0\n");
}

TEST_CASE("oc round-trips through its structured form") {
  const Run r = run({"oc", "--family", "C", "--rank", "7", "--q", "2", "--format", "structured"});
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["schema"] == "gkcheck.oc/1");
  CHECK(order_components_from_json(j["order_components"]) ==
        order_components(GroupSpec::lie(Family::C, 7, 2)));
  CHECK(run({"oc", "--family", "B", "--rank", "5", "--q", "2"}).out.find("m_2 = 31") != std::string::npos);
}

TEST_CASE("graph formats") {
  const Run adj = run({"graph", "--family", "C", "--rank", "5", "--q", "2"});
  CHECK(adj.code == 0);
  CHECK(parse_adjacency_text(adj.out) == build_graph(GroupSpec::lie(Family::C, 5, 2)));
  const Run dot = run({"graph", "--family", "C", "--rank", "5", "--q", "2", "--format", "dot"});
  CHECK(dot.out.find("\"31\" [label=\"31\", component=2];") != std::string::npos);
  const Run js = run({"graph", "--family", "C", "--rank", "5", "--q", "2", "--format", "structured"});
  CHECK(nlohmann::json::parse(js.out)["graph"]["edges"].size() == 9);
}

TEST_CASE("verify exit codes") {
  const Run ok = run({"verify", "--p", "5"});
  CHECK(ok.code == 0);
  CHECK(ok.out.find("verdict: TheoremVerified") != std::string::npos);

  const Run js = run({"verify", "--p", "7", "--format", "structured"});
  CHECK(js.code == 0);
  CHECK(nlohmann::json::parse(js.out)["verdict"] == "TheoremVerified");

  const Run bad = run({"verify", "--p", "11"});
  CHECK(bad.code == 2);
  CHECK(bad.err.rfind("error: E_INVALID_EXPONENT: ", 0) == 0);

  const Run huge = run({"verify", "--p", "89"});
  CHECK(huge.code == 3);
  CHECK(huge.err.rfind("error: E_MAGNITUDE: ", 0) == 0);

  const Run small = run({"verify", "--p", "5", "--q-bound", "4"});
  CHECK(small.code == 3);
  CHECK(small.err.rfind("error: E_BOUND_TOO_SMALL: ", 0) == 0);
}

TEST_CASE("q bound from the environment") {
  setenv("GKCHECK_Q_BOUND", "4", 1);
  CHECK(run({"verify", "--p", "5"}).code == 3);
  CHECK(run({"verify", "--p", "5", "--q-bound", "0"}).code == 0);
  unsetenv("GKCHECK_Q_BOUND");
}

TEST_CASE("validation errors exit 2 before computing") {
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"order", "--family", "C", "--rank", "2", "--q", "2"}).code == 2);
  CHECK(run({"order", "--family", "C", "--q", "2"}).code == 2);
  CHECK(run({"order", "--family", "Q", "--rank", "2", "--q", "2"}).code == 2);
  CHECK(run({"order", "--family", "A", "--rank", "2", "--q", "6"}).code == 2);
  CHECK(run({"order", "--family", "A", "--rank", "2", "--q", "x"}).code == 2);
  CHECK(run({"graph", "--family", "A", "--rank", "3", "--q", "4"}).code == 2);
  CHECK(run({"degpat", "--family", "C", "--rank", "5", "--q", "2", "--format", "dot"}).code == 2);
  CHECK(run({"verify"}).code == 2);
  const Run r = run({"order", "--family", "C", "--rank", "2", "--q", "2"});
  CHECK(r.err.rfind("error: E_ILLEGAL_SPEC: ", 0) == 0);
}

TEST_CASE("catalog and selftest") {
  const Run cat = run({"catalog", "--p", "5", "--format", "structured"});
  REQUIRE(cat.code == 0);
  CHECK(nlohmann::json::parse(cat.out)["cases"].size() == 32);
  const Run one = run({"catalog", "--p", "5", "--case", "32"});
  CHECK(one.out.find("step 32: C_r(2)") != std::string::npos);
  CHECK(run({"catalog", "--p", "5", "--case", "40"}).code == 2);
  const Run self = run({"selftest"});
  CHECK(self.code == 0);
  CHECK(self.out.find("FAIL") == std::string::npos);
}

TEST_CASE("help exits 0") {
  const Run r = run({"--help"});
  CHECK(r.code == 0);
  CHECK(r.out.find("verify") != std::string::npos);
}
