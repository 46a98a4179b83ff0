#include "doctest.h"

#include <zmsp/cli.hpp>
#include <zmsp/partitions.hpp>
#include <zmsp/serialize.hpp>

#include <cstdlib>
#include <fstream>
#include <initializer_list>
#include <sstream>
#include <string>
#include <vector>

using namespace zmsp;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run_cli(std::initializer_list<std::string> args) {
  std::vector<std::string> storage{"zmsp"};
  storage.insert(storage.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& s : storage) argv.push_back(s.c_str());
  std::ostringstream out, err;
  const int code = cli::main_entry(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string read_golden(const std::string& name) {
  std::ifstream in(std::string(ZMSP_GOLDEN_DIR) + "/" + name);
  REQUIRE_MESSAGE(in.good(), "missing golden file " << name);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("golden outputs") {
  CHECK(run_cli({"expand", "--n", "3", "--k", "1"}).out == read_golden("expand_n3_k1.json"));
  CHECK(run_cli({"expand", "--n", "4", "--k", "1", "--format", "tsv"}).out ==
        read_golden("expand_n4_k1.tsv"));
  CHECK(run_cli({"expand", "--n", "3", "--k", "1", "--format", "plain"}).out ==
        "x1^3 - 3*x1*x2*x3 + x2^3 + x3^3\n");
  CHECK(run_cli({"count", "--n", "3", "--k", "1"}).out == read_golden("count_n3_k1.json"));
  CHECK(run_cli({"eval", "--n", "3", "--k", "1", "--lambda", "1,2,3"}).out ==
        read_golden("eval_n3_k1_123.json"));
  CHECK(run_cli({"verify", "--n", "3", "--k", "1", "--suite", "thm32", "--omit-elapsed"}).out ==
        read_golden("verify_thm32_n3_k1.json"));
  CHECK(run_cli({"conjecture", "--n", "6", "--k", "1", "--omit-elapsed"}).out ==
        read_golden("conjecture_n6_k1.json"));
}

TEST_CASE("eval examples") {
  auto r = run_cli({"eval", "--n", "3", "--k", "1", "--lambda", "1,2,3"});
  CHECK(r.code == 0);
  auto j = Json::parse(r.out);
  CHECK(j["value"] == -3);
  CHECK(j["lambda"] == "1,2,3");

  r = run_cli({"eval", "--n", "2", "--k", "2", "--lambda", "1,1,2,2", "--method", "naive"});
  CHECK(r.code == 0);
  j = Json::parse(r.out);
  CHECK(j["value"] == -2);
  CHECK(j["method_used"] == "naive");

  r = run_cli({"count", "--n", "3", "--k", "1"});
  j = Json::parse(r.out);
  CHECK(j["nu"] == 4);
  CHECK(j["lambda_tilde"] == 4);
  CHECK(j["equal"] == true);
}

TEST_CASE("lambda is echoed canonically with a notice for out-of-range parts") {
  auto r = run_cli({"eval", "--n", "3", "--k", "1", "--lambda", "3,2,1"});
  CHECK(Json::parse(r.out)["lambda"] == "1,2,3");
  CHECK(r.err.empty());
  r = run_cli({"eval", "--n", "3", "--k", "1", "--lambda", "-2,0,5"});
  CHECK(r.code == 0);
  CHECK(Json::parse(r.out)["lambda"] == "1,2,3");
  CHECK(r.err.find("notice") != std::string::npos);
}

TEST_CASE("every method prints the same value") {
  for (auto [n, k] : std::vector<std::pair<int, int>>{{3, 2}, {4, 2}, {5, 1}}) {
    for (const auto& p : enumerate(n, k * n, false)) {
      const std::string ns = std::to_string(n), ks = std::to_string(k), ls = p.to_string();
      const auto dp = Json::parse(run_cli({"eval", "--n", ns, "--k", ks, "--lambda", ls, "--method", "dp"}).out);
      const auto naive =
          Json::parse(run_cli({"eval", "--n", ns, "--k", ks, "--lambda", ls, "--method", "naive"}).out);
      const auto autom = Json::parse(run_cli({"eval", "--n", ns, "--k", ks, "--lambda", ls}).out);
      CHECK(dp["value"] == naive["value"]);
      CHECK(dp["value"] == autom["value"]);
      const auto closed = run_cli({"eval", "--n", ns, "--k", ks, "--lambda", ls, "--method", "closed"});
      if (closed.code == 0) {
        CHECK(Json::parse(closed.out)["value"] == dp["value"]);
      } else {
        CHECK(closed.code == 2);
      }
    }
  }
}

TEST_CASE("exit codes") {
  CHECK(run_cli({}).code == 2);
  CHECK(run_cli({"frobnicate"}).code == 2);
  CHECK(run_cli({"eval", "--k", "1", "--lambda", "1"}).code == 2);
  CHECK(run_cli({"eval", "--n", "3", "--k", "1", "--lambda", "1,2"}).code == 2);
  CHECK(run_cli({"eval", "--n", "3", "--k", "1", "--lambda", "1,x,2"}).code == 2);
  CHECK(run_cli({"count", "--n", "3", "--k", "1", "--format", "xml"}).code == 2);
  CHECK(run_cli({"eval", "--n", "3", "--k", "1", "--lambda", "1,2,3", "--method", "magic"}).code == 2);
  CHECK(run_cli({"verify", "--n", "3", "--suite", "nope"}).code == 2);
  CHECK(run_cli({"eval", "--n", "0", "--k", "1", "--lambda", "1"}).code == 2);
  CHECK(run_cli({"eval", "--n", "5", "--k", "2", "--lambda", "1,1,1,1,1,1,1,1,1,1", "--method", "naive"}).code == 3);
  CHECK(run_cli({"eval", "--n", "6", "--k", "1", "--lambda", "1,2,3,4,5,6", "--method", "dp", "--budget", "10"}).code == 3);
  CHECK(run_cli({"expand", "--n", "7", "--k", "3", "--budget", "1000"}).code == 3);
  const auto fail = run_cli({"verify", "--n", "2", "--k", "2", "--suite", "thm12"});
  CHECK(fail.code == 1);
  CHECK(Json::parse(fail.out)["passed"] == false);
  CHECK(run_cli({"verify", "--n", "3", "--k", "1"}).code == 0);
  CHECK(run_cli({"--help"}).code == 0);
}

TEST_CASE("budget from the environment") {
  ::setenv("ZMSP_BUDGET", "10", 1);
  const int code = run_cli({"eval", "--n", "6", "--k", "1", "--lambda", "1,2,3,4,5,6", "--method", "dp"}).code;
  ::unsetenv("ZMSP_BUDGET");
  CHECK(code == 3);
  CHECK(run_cli({"eval", "--n", "6", "--k", "1", "--lambda", "1,2,3,4,5,6", "--method", "dp"}).code == 0);
}

TEST_CASE("json output is valid and independent of --jobs") {
  for (const std::string suite : {"all", "thm11", "thm12", "thm32", "prop21", "branching", "lemma24"}) {
    const auto a = run_cli({"verify", "--n", "4", "--k", "1", "--suite", suite, "--omit-elapsed"});
    const auto b = run_cli({"verify", "--n", "4", "--k", "1", "--suite", suite, "--omit-elapsed", "--jobs", "4"});
    CHECK_MESSAGE(a.out == b.out, suite);
    const auto j = Json::parse(a.out);
    CHECK(j["suite"] == suite);
    CHECK(j.contains("failures"));
    CHECK_FALSE(j.contains("elapsed_ms"));
  }
  const auto a = run_cli({"conjecture", "--n", "8", "--k", "1", "--omit-elapsed"});
  const auto b = run_cli({"conjecture", "--n", "8", "--k", "1", "--omit-elapsed", "--jobs", "3"});
  CHECK(a.out == b.out);
  CHECK(Json::parse(run_cli({"verify", "--n", "3"}).out).contains("elapsed_ms"));
}

TEST_CASE("tsv and plain renderings") {
  const auto tsv = run_cli({"count", "--n", "6", "--k", "1", "--format", "tsv"}).out;
  CHECK(tsv == "n\tk\tnu\tlambda_tilde\tequal\n6\t1\t68\t80\tfalse\n");
  const auto plain = run_cli({"eval", "--n", "3", "--k", "1", "--lambda", "1,2,3", "--format", "plain"}).out;
  CHECK(plain.find("= -3") != std::string::npos);
}

TEST_CASE("integers beyond 64 bits are written as strings") {
  const BigInt big = BigInt(1) << 70;
  CHECK(to_json(big) == "1180591620717411303424");
  CHECK(to_json(BigInt(-5)) == -5);
}

}  // TEST_SUITE
