#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "doctest.h"
#include "json.hpp"
#include "support.hpp"

using namespace ptol::test;
using ptol::cli::kFails;
using ptol::cli::kHolds;
using ptol::cli::kInputError;

namespace {

struct Run {
  int status;
  std::string out;
  std::string err;
};

Run run_cli(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  int const status = ptol::cli::main_entry(args, out, err);
  return {status, out.str(), err.str()};
}

std::string fx(std::string const& name) { return fixture_path(name); }

// Writes `text` to a scratch file and returns its path.
std::string scratch(std::string const& name, std::string const& text) {
  std::filesystem::path const path = std::filesystem::temp_directory_path() / ("ptol_test_" + name);
  std::ofstream(path) << text;
  return path.string();
}

}  // namespace

TEST_CASE("validate-poset") {
  Run const ok = run_cli({"validate-poset", fx("fig3.poset")});
  CHECK(ok.status == kHolds);
  CHECK(ok.out == "valid poset: 6 elements, 8 covers, lattice: no\n");

  Run const cyclic = run_cli({"validate-poset", scratch("cycle.poset", "poset\nelements: 0 a\ncovers: 0<a a<0\n")});
  CHECK(cyclic.status == kFails);
  CHECK(cyclic.out.rfind("invalid poset: ", 0) == 0);

  std::string const bad = scratch("dup.poset", "poset\nelements: 0 a 0\ncovers:\n");
  Run const dup = run_cli({"validate-poset", bad});
  CHECK(dup.status == kInputError);
  CHECK(dup.err == "error: " + bad + ":2:15: duplicate label '0'\n");

  CHECK(run_cli({"validate-poset", fx("missing.poset")}).status == kInputError);
}

TEST_CASE("validate-tolerance") {
  Run const ok = run_cli({"validate-tolerance", fx("fig1.poset"), fx("fig1_T.tol")});
  CHECK(ok.status == kHolds);
  CHECK(ok.out == "tolerance: yes\n2-uniform: yes\n");

  std::string const bad = scratch("chain3_bad.tol", "tolerance\npairs: 0~a 0~1\n");
  Run const fails = run_cli({"validate-tolerance", fx("chain3.poset"), bad});
  CHECK(fails.status == kFails);
  CHECK(fails.out == "tolerance: no, condition (1): (0,a),(1,0)\n");

  Run const js = run_cli({"validate-tolerance", fx("chain3.poset"), bad, "--json"});
  nlohmann::json const j = nlohmann::json::parse(js.out);
  CHECK(js.status == kFails);
  CHECK(j["exit_status"] == kFails);
  CHECK(j["verdict"]["holds"] == false);
  CHECK(j["verdict"]["violated"] == "(1)");
  CHECK(j["verdict"]["witness"] == nlohmann::json::array({"0", "a", "1", "0"}));
}

TEST_CASE("blocks and neighbors") {
  Run const b = run_cli({"blocks", fx("fig1.poset"), fx("fig1_T.tol")});
  CHECK(b.status == kHolds);
  CHECK(b.out == "{0,a}\n{a,b}\n{c,e}\n{d,g}\n{f,1}\n");

  Run const n = run_cli({"neighbors", fx("fig3.poset"), fx("fig3_T.tol"), "--json"});
  CHECK(n.status == kHolds);
  nlohmann::json const j = nlohmann::json::parse(n.out);
  CHECK(j["neighbors"][0]["element"] == "0");
  CHECK(j["neighbors"][0]["upper"] == "a");
  CHECK(j["neighbors"][0]["lower"].is_null());
}

TEST_CASE("compose") {
  Run const r = run_cli({"compose", fx("fig1.poset"), fx("fig1_T.tol"), fx("fig1_S.tol")});
  CHECK(r.status == kHolds);
  CHECK(r.out.find("beyond union: (0,b) (b,0) (d,1) (f,g) (g,f) (1,d)\n") != std::string::npos);
}

TEST_CASE("permute and amicable on the worked examples") {
  for (char const* fig : {"fig1", "fig2"}) {
    std::string const f(fig);
    CHECK(run_cli({"permute", fx(f + ".poset"), fx(f + "_T.tol"), fx(f + "_S.tol")}).status == kHolds);
    CHECK(run_cli({"amicable", fx(f + ".poset"), fx(f + "_T.tol"), fx(f + "_S.tol")}).status == kHolds);
  }
  Run const p3 = run_cli({"permute", fx("fig3.poset"), fx("fig3_T.tol"), fx("fig3_S.tol")});
  CHECK(p3.status == kFails);
  CHECK(p3.out == "permute: no, (a,b) is in T∘S but not in S∘T\n");

  Run const a3 = run_cli({"amicable", fx("fig3.poset"), fx("fig3_T.tol"), fx("fig3_S.tol"), "--explain"});
  CHECK(a3.status == kFails);
  CHECK(a3.out.rfind("amicable: no, condition (5): a,b via 0\n", 0) == 0);
  CHECK(a3.out.find("condition (5): fails, witness a,b,0\n") != std::string::npos);
  CHECK(a3.out.find("(T,S)-bot") != std::string::npos);

  // A tolerance that is not 2-uniform is an input error for pair commands.
  std::string const diag = scratch("diag.tol", "tolerance\nblocks:\n");
  Run const bad = run_cli({"amicable", fx("fig3.poset"), diag, fx("fig3_S.tol")});
  CHECK(bad.status == kInputError);
  CHECK(bad.err.find("not 2-uniform") != std::string::npos);
}

TEST_CASE("JSON and text verdicts agree") {
  for (char const* fig : {"fig1", "fig2", "fig3"}) {
    std::string const f(fig);
    for (char const* cmd : {"permute", "amicable"}) {
      std::vector<std::string> args{cmd, fx(f + ".poset"), fx(f + "_T.tol"), fx(f + "_S.tol")};
      Run const text = run_cli(args);
      args.emplace_back("--json");
      Run const js = run_cli(args);
      nlohmann::json const j = nlohmann::json::parse(js.out);
      CHECK(text.status == js.status);
      CHECK(j["exit_status"] == js.status);
      CHECK(j["verdict"]["holds"] == (text.status == kHolds));
      CHECK(j["command"] == cmd);
    }
  }
}

TEST_CASE("enumerate") {
  Run const count = run_cli({"enumerate", fx("chain3.poset"), "--count-only"});
  CHECK(count.status == kHolds);
  CHECK(count.out == "1\n");

  Run const list = run_cli({"enumerate", fx("fig3.poset"), "--cross-check"});
  CHECK(list.status == kHolds);
  CHECK(list.out.find("{0,a} {b,d} {c,1}\n") != std::string::npos);
  CHECK(list.out.find("brute-force cross-check: agrees\n") != std::string::npos);

  CHECK(run_cli({"enumerate", fx("fig1.poset"), "--cross-check"}).status == kInputError);
}

TEST_CASE("pairs") {
  Run const r = run_cli({"pairs", fx("fig3.poset"), "--filter", "non_permuting", "--json"});
  CHECK(r.status == kHolds);
  nlohmann::json const j = nlohmann::json::parse(r.out);
  CHECK(j["filter"] == "non_permuting");
  CHECK(j["count"] == j["pairs"].size());
  CHECK(j["count"] > 0);
  CHECK(run_cli({"pairs", fx("fig3.poset"), "--filter", "nope"}).status == kInputError);
}

TEST_CASE("verify-theorem") {
  Run const a = run_cli({"verify-theorem", "--max-n", "5", "--no-timing"});
  Run const b = run_cli({"verify-theorem", "--max-n", "5", "--no-timing", "--jobs", "3"});
  CHECK(a.status == kHolds);
  CHECK(a.out == b.out);
  CHECK(a.out.find("counterexamples: 0\n") != std::string::npos);
  CHECK(a.out.find("wall time") == std::string::npos);

  Run const js = run_cli({"verify-theorem", "--max-n", "4", "--json", "--dedup"});
  nlohmann::json const j = nlohmann::json::parse(js.out);
  CHECK(j["theorem_holds"] == true);
  CHECK(j["deduplicated"] == true);
  CHECK(j.contains("wall_time_seconds"));

  CHECK(run_cli({"verify-theorem", "--max-n", "9"}).status == kInputError);
  CHECK(run_cli({"verify-theorem", "--max-n", "0"}).status == kInputError);
}

TEST_CASE("usage errors") {
  CHECK(run_cli({}).status == kInputError);
  CHECK(run_cli({"frobnicate"}).status == kInputError);
  CHECK(run_cli({"permute", fx("fig3.poset")}).status == kInputError);
  CHECK(run_cli({"verify-theorem"}).status == kInputError);
  Run const help = run_cli({"--help"});
  CHECK(help.status == kHolds);
  CHECK(help.out.find("verify-theorem") != std::string::npos);
}
