#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "../vendor/json.hpp"
#include "pricedq/strategy_tree.hpp"

namespace {

std::string cli_path() {
  const char* p = std::getenv("PRICEDQ_CLI");
  REQUIRE_MESSAGE(p != nullptr, "PRICEDQ_CLI must point at the built binary");
  return p;
}

struct CliResult {
  int exit_code = -1;
  std::string out;
};

CliResult run_cli(const std::string& args) {
  CliResult r;
  std::string cmd = cli_path() + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf;
  size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
  int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

}  // namespace

TEST_CASE("run reports the bias-threshold strategy on AND2") {
  CliResult r = run_cli("run --f and:2 --eps 0.1 --seed 1");
  CHECK(r.exit_code == 0);
  CHECK(r.out ==
        "n,kind,sum_c,inf_total,eps,B,error,expected_cost,opt_expected,opt_worst,"
        "bound_ratio,seed\n"
        "2,and,2,1,0.1,,0,1.5,1.5,2,0.01,1\n");
}

TEST_CASE("cli output is byte-stable across invocations") {
  const char* cmd = "run --f tribes:2:2 --costs uniform:4 --eps 0.05 --budget 6 --seed 9";
  CliResult a = run_cli(cmd);
  CliResult b = run_cli(cmd);
  CHECK(a.exit_code == 0);
  CHECK(a.out == b.out);
  CHECK(!a.out.empty());
}

TEST_CASE("budget doubling lands on B=2 for parity2") {
  CliResult r = run_cli("budget --f parity:2 --eps 0.1 --seed 7");
  CHECK(r.exit_code == 0);
  CHECK(r.out ==
        "n,kind,eps,B,measured_error,doublings,samples,seed\n"
        "2,parity,0.1,2,0,1,2952,7\n");
}

TEST_CASE("json format parses and keeps numeric cells") {
  CliResult r = run_cli("influence --f tribes:2:2 --format json");
  CHECK(r.exit_code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["command"] == "influence");
  REQUIRE(j["rows"].size() == 4);
  CHECK(j["rows"][0]["inf_i"] == 0.375);
  CHECK(j["rows"][0]["i"] == 1);  // wire coordinates are 1-based
}

TEST_CASE("opt emits both objectives and a loadable witness tree") {
  std::string tree_path = "cli_test_tree.json";
  CliResult r = run_cli("opt --f and:2 --costs 1,4 --tree-out " + tree_path);
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("expected,3") != std::string::npos);
  CHECK(r.out.find("worst,5") != std::string::npos);
  std::ifstream in(tree_path);
  REQUIRE(in.good());
  std::stringstream buf;
  buf << in.rdbuf();
  pricedq::StrategyTree t = pricedq::StrategyTree::from_json(buf.str());
  CHECK(t.valid(2));
  CHECK(!t.root()->is_leaf());
  std::remove(tree_path.c_str());
}

TEST_CASE("verify exits zero when the suites hold") {
  CliResult r = run_cli("verify --suite cost_lemma --samples 6 --seed 3");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("cost_lemma") != std::string::npos);
  // Every emitted row ends with holds=1.
  std::istringstream lines(r.out);
  std::string line;
  std::getline(lines, line);  // header
  int rows = 0;
  while (std::getline(lines, line)) {
    CHECK(line.substr(line.size() - 2) == ",1");
    ++rows;
  }
  CHECK(rows > 0);
}

TEST_CASE("bad usage exits with code 1") {
  CHECK(run_cli("").exit_code == 1);
  CHECK(run_cli("run").exit_code == 1);  // --f is required
  CHECK(run_cli("run --f nonsense:3").exit_code == 1);
  CHECK(run_cli("run --f and:2 --eps 0.7").exit_code == 1);
  CHECK(run_cli("frobnicate").exit_code == 1);
  CHECK(run_cli("run --f and:2 --format xml").exit_code == 1);
}

TEST_CASE("function specs load from JSON text and files") {
  CliResult inline_json =
      run_cli("influence --f '{\"kind\":\"parity\",\"n\":3}'");
  CHECK(inline_json.exit_code == 0);
  CHECK(inline_json.out.find("1,1,") != std::string::npos);

  std::string spec_path = "cli_test_fn.json";
  {
    std::ofstream out(spec_path);
    out << "{\"kind\":\"dnf\",\"n\":2,\"terms\":[[1,2]]}\n";
  }
  CliResult from_file = run_cli("influence --f " + spec_path);
  CHECK(from_file.exit_code == 0);
  CHECK(from_file.out.find("0.5") != std::string::npos);
  std::remove(spec_path.c_str());
}
