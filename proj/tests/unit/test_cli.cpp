#include <doctest.h>

#include <json.hpp>
#include <sstream>

#include "helpers.hpp"
#include "sigmapi/annotate.hpp"
#include "sigmapi/cli.hpp"

using namespace sigmapi;

namespace {
struct Result {
  int code;
  std::string out;
  std::string err;
};

Result cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run(args, out, err);
  return {code, out.str(), err.str()};
}
}  // namespace

TEST_CASE("decide on the intro file") {
  Result r = cli({"decide", test::data("intro.spt"), "--left", "f", "--right", "g"});
  CHECK(r.code == 0);
  CHECK(r.out == "Equal (disconnect)\n");

  r = cli({"decide", test::data("intro.spt"), "--left", "f0", "--right", "g0"});
  CHECK(r.code == 1);
  CHECK(r.out == "NotEqual (corner-mismatch)\n");
}

TEST_CASE("decide with json, witness and stats") {
  Result r = cli({"decide", test::data("intro.spt"), "--left", "f", "--right", "g", "--json"});
  REQUIRE(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["schema_version"] == kJsonSchemaVersion);
  CHECK(j["outcome"] == "Equal");
  CHECK(j["witness"]["kind"] == "disconnect");
  CHECK(j["stats"]["steps"].get<int>() > 0);

  r = cli({"decide", test::data("intro.spt"), "--left", "f", "--right", "g", "--witness", "--stats"});
  CHECK(r.out.find("witness: ") != std::string::npos);
  CHECK(r.out.find("steps: ") != std::string::npos);
}

TEST_CASE("generator terms need the oracle") {
  Result r = cli({"decide", test::data("bouncer.spt"), "--left", "f", "--right", "g"});
  CHECK(r.code == 2);
  CHECK(r.out == "RequiresOracle\n");
  r = cli({"oracle", "decide", test::data("bouncer.spt"), "--left", "f", "--right", "g"});
  CHECK(r.code == 0);
  CHECK(r.out == "Equal\n");
}

TEST_CASE("batch keeps the input order") {
  std::string pairs = std::string(SIGMAPI_TEST_DATA) + "/intro.pairs";
  Result r = cli({"decide", test::data("intro.spt"), "--batch", pairs});
  CHECK(r.code == 1);
  CHECK(r.out == "f0 g0: NotEqual (corner-mismatch)\nf g: Equal (disconnect)\nf f: Equal (syntactic-recursion)\n");
}

TEST_CASE("enumerate counts terms and classes") {
  Result r = cli({"enumerate", "-X", "1*1", "-A", "1+1", "--classes"});
  CHECK(r.code == 0);
  CHECK(r.out == "10 terms, 2 classes\n");
  r = cli({"oracle", "enumerate", "-X", "0", "-A", "1", "--classes", "--list"});
  CHECK(r.out == "2 terms, 1 class\nclass 0:\n  !\n  ?\n");
}

TEST_CASE("type errors exit 66 with a location") {
  Result r = cli({"check", test::data("bad.spt")});
  CHECK(r.code == 66);
  CHECK(r.err.find("bad.spt:2:") != std::string::npos);
  CHECK(r.err.find("type error in bad") != std::string::npos);
}

TEST_CASE("exit codes for usage, parse and guard failures") {
  CHECK(cli({}).code == 64);
  CHECK(cli({"frobnicate"}).code == 64);
  CHECK(cli({"decide", test::data("intro.spt"), "--left", "f", "--right", "nope"}).code == 64);
  CHECK(cli({"enumerate", "-X", "1+", "-A", "1"}).code == 65);
  CHECK(cli({"enumerate", "-X", "(1+1)*(1+1)", "-A", "(1+1)*(1+1)", "--guard", "10"}).code == 70);
  CHECK(cli({"decide", test::data("intro.spt"), "--left", "f", "--right", "f0"}).code == 66);
  CHECK(cli({"--help"}).code == 0);
}

TEST_CASE("compose, annotate and factor") {
  Result r = cli({"compose", test::data("laws.spt"), "--left", "swap", "--right", "swap"});
  CHECK(r.out == "{s0 !, s1 !}\n");
  r = cli({"annotate", test::data("intro.spt"), "--term", "f0", "--json"});
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["annotation"]["copointed"] == true);
  CHECK(j["annotation"]["pointed"] == false);
  r = cli({"factor", test::data("intro.spt"), "--term", "f", "--inj", "1"});
  CHECK(r.code == 0);
  CHECK(r.out == "p0 ? : 0 * 0 -> 1\n");
  CHECK(cli({"factor", test::data("intro.spt"), "--term", "f0", "--proj", "1"}).code == 1);
  CHECK(cli({"factor", test::data("intro.spt"), "--term", "f0"}).code == 64);
}

TEST_CASE("oracle path and bouncers") {
  Result r = cli({"oracle", "path", test::data("bouncer.spt"), "--left", "f", "--right", "g"});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("1 step\n", 0) == 0);
  r = cli({"oracle", "bouncers", test::data("bouncer.spt"), "--left", "pG", "--right", "sF", "-i", "0", "-j", "0",
           "--json"});
  CHECK(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  bool found = false;
  for (const auto& h : j["bouncers"]) found = found || h == "{<p0 ?, p1 ?>, <s0 !, @k>}";
  CHECK(found);
}

TEST_CASE("bench writes the fixed CSV columns") {
  Result r = cli({"bench", "--min-height", "2", "--max-height", "4"});
  CHECK(r.code == 0);
  std::istringstream in(r.out);
  std::string line;
  std::getline(in, line);
  CHECK(line == "height,size_X,size_A,steps,micros");
  int rows = 0;
  while (std::getline(in, line)) ++rows;
  CHECK(rows == 3);
}

TEST_CASE("the bench family is a definite equal pair") {
  for (int h = 2; h <= 6; ++h) {
    BenchCase c = bench_case(h);
    CHECK(c.left != c.right);
    CHECK(c.dom.height() == static_cast<std::size_t>(h));
    BenchRow r = run_bench(c);
    CHECK(r.verdict.equal());
    if (h >= 4) CHECK(annotate(c.left).definite());
  }
}
