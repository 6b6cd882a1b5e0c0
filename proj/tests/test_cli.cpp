#include <doctest.h>

#include <algorithm>
#include <json.hpp>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"

using nlohmann::json;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = tcnet::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::size_t line_count(const std::string& s) { return static_cast<std::size_t>(std::count(s.begin(), s.end(), '\n')); }

}  // namespace

TEST_CASE("count") {
  CHECK(run({"count", "otc", "--d", "3", "--n", "3", "--k", "2"}).out == "60\n");
  CHECK(run({"count", "tcmax", "--d", "2", "--n", "8"}).out == "8485564550400\n");
  CHECK(run({"count", "c", "--d", "2", "--n", "3"}).out == "106\n");
  CHECK(run({"count", "b", "--d", "2", "--n", "2", "--m", "2"}).out == "4\n");
  const Run r = run({"count", "tcmax", "--d", "6", "--n", "40", "--format", "json"});
  REQUIRE(r.code == 0);
  const json j = json::parse(r.out);
  CHECK(j["command"] == "count");
  CHECK(j["result"]["value"].is_string());
  CHECK(j.contains("version"));
  CHECK(j.contains("params"));
}

TEST_CASE("usage errors exit 2") {
  CHECK(run({}).code == 2);
  CHECK(run({"count", "otc", "--d", "1", "--n", "3", "--k", "1"}).code == 2);
  CHECK(run({"count", "otc", "--n", "3", "--k", "1", "--bogus"}).code == 2);
  CHECK(run({"count", "frob", "--n", "3"}).code == 2);
  CHECK(run({"enumerate", "networks", "--d", "2", "--n", "3", "--k", "1", "--format", "plain"}).code == 2);
  CHECK(run({"dist", "--d", "2", "--n", "10", "--limit", "bessel"}).code == 2);
  CHECK(run({"dist", "--d", "2", "--n", "8", "--limit", "normal", "--exploratory", "poisson"}).code == 2);
  CHECK(run({"verify", "--suite", "props", "--d", "2", "--q", "abc"}).code == 2);
  CHECK(run({"asym", "residual", "--window", "500"}).code == 2);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("enumerate") {
  const Run w = run({"enumerate", "words", "--d", "2", "--n", "2"});
  CHECK(w.code == 0);
  CHECK(line_count(w.out) == 7);
  CHECK(w.out.rfind("111222\n", 0) == 0);
  CHECK(run({"enumerate", "networks", "--d", "2", "--n", "3", "--k", "2", "--format", "count"}).out == "42\n");
  CHECK(run({"enumerate", "networks", "--d", "5", "--n", "2", "--k", "1", "--format", "count"}).out == "2\n");
  CHECK(run({"enumerate", "networks", "--d", "3", "--n", "3", "--k", "2", "--class", "otc"}).out == "60\n");
  const Run js = run({"enumerate", "networks", "--d", "2", "--n", "2", "--k", "1", "--class", "otc", "--format", "json"});
  REQUIRE(js.code == 0);
  const json j = json::parse(js.out);
  CHECK(j["result"]["count"] == 2);
  CHECK(j["result"]["networks"].size() == 2);
  const Run dot = run({"enumerate", "networks", "--d", "2", "--n", "2", "--k", "1", "--format", "dot"});
  CHECK(dot.out.find("digraph") != std::string::npos);
}

TEST_CASE("budget exceeded exits 3") {
  CHECK(run({"enumerate", "networks", "--d", "3", "--n", "4", "--k", "3", "--format", "count", "--budget", "100"}).code == 3);
  CHECK(run({"enumerate", "words", "--d", "2", "--n", "5", "--budget", "20"}).code == 3);
}

TEST_CASE("output is deterministic across runs and thread counts") {
  const std::vector<std::string> base{"enumerate", "networks", "--d", "2", "--n", "4", "--k", "2", "--format", "json"};
  auto one = base;
  one.insert(one.end(), {"--threads", "1"});
  auto two = base;
  two.insert(two.end(), {"--threads", "2"});
  const Run a = run(one);
  const Run b = run(two);
  const Run c = run(one);
  REQUIRE(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(a.out == c.out);
  CHECK(run({"dist", "--d", "3", "--n", "50", "--format", "csv"}).out == run({"dist", "--d", "3", "--n", "50", "--format", "csv"}).out);
}

TEST_CASE("table") {
  const Run r = run({"table", "otc", "--d", "3", "--n-min", "1", "--n-max", "4", "--format", "csv"});
  CHECK(r.code == 0);
  CHECK(r.out.find("3,2,60\n") != std::string::npos);
  const Run f = run({"table", "fixture", "--d", "2", "--format", "json"});
  CHECK(f.code == 0);
  CHECK(json::parse(f.out)["d"] == 2);
}

TEST_CASE("verify suites") {
  const Run t = run({"verify", "--suite", "tables", "--d", "3"});
  CHECK(t.code == 0);
  CHECK(json::parse(t.out)["result"]["pass"] == true);
  CHECK(run({"verify", "--suite", "sandwich"}).code == 0);
  CHECK(run({"verify", "--suite", "words", "--d", "2", "--n-max", "12"}).code == 0);
  CHECK(run({"verify", "--suite", "formulas", "--d", "2", "--n-max", "3"}).code == 0);

  // The literal coefficient leaves super-solution violations at m = 0 for every n.
  const Run p = run({"verify", "--suite", "props", "--d", "2", "--q", "13", "--n-lo", "200", "--n-hi", "240", "--n-step", "20"});
  CHECK(p.code == 1);
  const json pj = json::parse(p.out);
  CHECK(pj["params"]["q"] == "13");
  CHECK(pj["result"]["pass"] == false);
  CHECK(pj.dump().find("n_threshold") != std::string::npos);
}

TEST_CASE("dist") {
  const Run b = run({"dist", "--d", "3", "--n", "10000", "--limit", "bessel"});
  CHECK(b.code == 0);
  CHECK(json::parse(b.out)["result"]["tv"].get<double>() < 0.01);
  const Run g = run({"dist", "--d", "4", "--n", "100", "--limit", "degenerate"});
  CHECK(json::parse(g.out)["result"]["p_max"].get<double>() >= 0.99);
  const Run p = run({"dist", "--d", "2", "--n", "8", "--exploratory", "poisson"});
  CHECK(p.code == 0);
  CHECK(json::parse(p.out)["result"]["rows"].size() == 8);
  const Run c = run({"dist", "--d", "2", "--n", "2", "--format", "csv"});
  CHECK(c.out.rfind("k,log_prob\n", 0) == 0);
}

TEST_CASE("asym") {
  const Run r = run({"asym", "root"});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("-2.338107", 0) == 0);
  const Run res = run({"asym", "residual", "--d", "3", "--window", "500", "2000", "--format", "json"});
  REQUIRE(res.code == 0);
  const json j = json::parse(res.out);
  CHECK(j["result"]["max"].get<double>() - j["result"]["min"].get<double>() < 0.5);
  const Run f = run({"asym", "fit", "--d", "2", "--n-max", "1000"});
  REQUIRE(f.code == 0);
  CHECK(json::parse(f.out)["result"]["rel_err"].get<double>() < 0.1);
}
