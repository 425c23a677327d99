#include "doctest.h"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "pls/graph_io.hpp"
#include "pls/harness.hpp"

using namespace pls;

namespace {

std::string tmp_path(const std::string& name) {
  return std::string("/tmp/plsforge_test_") + name;
}

std::string slurp(const std::string& path) {
  std::ifstream is(path);
  std::stringstream ss;
  ss << is.rdbuf();
  return ss.str();
}

int run_binary(const std::string& args) {
#ifdef PLSFORGE_BIN
  std::string cmd = std::string(PLSFORGE_BIN) + " " + args + " >/dev/null 2>&1";
  int status = std::system(cmd.c_str());
  return WEXITSTATUS(status);
#else
  (void)args;
  return -1;
#endif
}

}  // namespace

TEST_CASE("gen writes the expected graphs deterministically") {
  auto p16 = tmp_path("p16.txt");
  auto r1 = cmd_gen("path", {16}, 1, p16);
  CHECK(r1.exit_code == kExitPass);
  Configuration cfg = read_graph_file(p16);
  CHECK(cfg.graph.node_count() == 16);
  CHECK(cfg.graph.edge_count() == 15);

  auto lay = tmp_path("lay25.txt");
  auto r2 = cmd_gen("layered", {2, 5}, 1, lay);
  CHECK(r2.exit_code == kExitPass);
  CHECK(read_graph_file(lay).graph.node_count() == 19);  // (t+2) + (t+1) m

  auto a = tmp_path("det_a.txt");
  auto b = tmp_path("det_b.txt");
  cmd_gen("random_connected", {20, 8}, 42, a);
  cmd_gen("random_connected", {20, 8}, 42, b);
  CHECK(slurp(a) == slurp(b));

  CHECK(cmd_gen("bogus", {3}, 0, tmp_path("x.txt")).exit_code == kExitError);
  CHECK(cmd_gen("layered", {1, 4}, 0, tmp_path("y.txt")).exit_code == kExitError);
}

TEST_CASE("partition command metrics") {
  auto p = tmp_path("p32.txt");
  cmd_gen("path", {32}, 1, p);

  auto warm = cmd_partition("warmup", p, 2, 0, 0.0, 0, tmp_path("warm.part"));
  CHECK(warm.exit_code == kExitPass);
  CHECK(warm.report["success"] == true);
  // exact degeneracy string "num/den" stays within the 1/2 bound at t=2
  std::string deg = warm.report["cluster_degeneracy"];
  auto slash = deg.find('/');
  REQUIRE(slash != std::string::npos);
  long num = std::stol(deg.substr(0, slash));
  long den = std::stol(deg.substr(slash + 1));
  CHECK(num * 2 <= den);
  CHECK(warm.report["max_weak_diameter"].get<int>() <= 16 * 2 * 5);
  {
    std::ifstream is(tmp_path("warm.part"));
    TsPartition part = read_partition(is);
    CHECK(!part.clusters.empty());
  }

  // padded with t at least twice the diameter: one cluster
  auto small = tmp_path("p6.txt");
  cmd_gen("path", {6}, 1, small);
  auto padded = cmd_partition("padded", small, 12, 3, 0.5, 50, "");
  CHECK(padded.exit_code == kExitPass);
  CHECK(padded.report["clusters"] == 1);

  // algA with zero budget: forced failure path, alive set reported
  auto alg = cmd_partition("algA", p, 1, 0, 0.0, /*budget=*/-1, "");
  CHECK(alg.exit_code == kExitPass);
  auto forced = cmd_partition("algA", p, 1, 0, 0.0, 0, "");
  CHECK(forced.exit_code == kExitFail);
  CHECK(forced.report["success"] == false);
  CHECK(forced.report["alive_count"] == 32);

  CHECK(cmd_partition("nope", p, 1, 0, 0.0, 0, "").exit_code == kExitError);
}

TEST_CASE("verify command: completeness and soundness modes") {
  auto g = tmp_path("verify_g.txt");
  cmd_gen("random_connected", {24, 10}, 5, g);

  auto comp = cmd_verify("string-share", g, "completeness", 1 << 20, 5, 3, 3);
  CHECK(comp.exit_code == kExitPass);
  CHECK(comp.report["pass"] == true);
  CHECK(comp.report["honest_cost_bits"].get<int>() <= 3);

  auto tree = cmd_verify("spanning-tree", g, "completeness", 1 << 20, 6, 3, 3);
  CHECK(tree.exit_code == kExitPass);

  auto lay = tmp_path("verify_lay.txt");
  cmd_gen("layered", {1, 3}, 0, lay);
  auto eq = cmd_verify("equality-gadget", lay, "completeness", 1 << 20, 7, 3, 3);
  CHECK(eq.exit_code == kExitPass);

  // exhaustive soundness at 2 bits on the gadget: nothing accepts
  auto sound = cmd_verify("equality-gadget", lay, "sound-exhaustive", 1 << 24, 8, 3, 2);
  CHECK(sound.exit_code == kExitPass);

  auto fuzz = cmd_verify("spanning-tree", g, "sound-fuzz", 1 << 20, 9, 500, 3);
  CHECK(fuzz.exit_code == kExitPass);

  auto vac = cmd_verify("spanning-tree", g, "sound-fuzz", 1 << 20, 9, 0, 3);
  CHECK(vac.exit_code == kExitPass);
  CHECK(vac.report["vacuous"] == "trials=0");

  CHECK(cmd_verify("no-such-scheme", g, "completeness", 1, 0, 1, 1).exit_code == kExitError);
  CHECK(cmd_verify("string-share", g, "bad-mode", 1, 0, 1, 1).exit_code == kExitError);
  // string-share has no invalid instances to exhaust
  CHECK(cmd_verify("string-share", g, "sound-exhaustive", 1 << 20, 0, 1, 1).exit_code ==
        kExitError);
}

TEST_CASE("verify reports are byte-identical given identical inputs") {
  auto g = tmp_path("verify_det.txt");
  cmd_gen("random_connected", {20, 8}, 11, g);
  auto a = cmd_verify("spanning-tree", g, "completeness", 1 << 20, 3, 2, 3);
  auto b = cmd_verify("spanning-tree", g, "completeness", 1 << 20, 3, 2, 3);
  CHECK(a.report.dump() == b.report.dump());
}

TEST_CASE("tradeoff curve") {
  // a cycle keeps the diameter above the carving radii at small t, so the
  // separating sets are non-empty and the curve actually slopes
  auto g = tmp_path("curve_g.txt");
  cmd_gen("cycle", {128}, 13, g);
  auto csv_path = tmp_path("curve.csv");
  auto r = cmd_tradeoff_curve("spanning-tree", g, {1, 2, 4}, 13, csv_path);
  REQUIRE(r.exit_code == kExitPass);
  std::string csv = slurp(csv_path);
  CHECK(csv.rfind("t,radius,cost_bits,ts_overhead_bits,error\n", 0) == 0);
  auto rows = r.report["rows"];
  REQUIRE(rows.size() == 3);
  std::size_t base_cost = r.report["base_cost_bits"].get<std::size_t>();
  // t = 1 costs at most the base scheme plus constant overhead
  std::size_t c1 = rows[0]["cost_bits"].get<std::size_t>();
  CHECK(c1 <= base_cost + 64);
  // non-increasing within a small tolerance
  for (std::size_t i = 0; i + 1 < rows.size(); ++i) {
    std::size_t a = rows[i]["cost_bits"].get<std::size_t>();
    std::size_t b = rows[i + 1]["cost_bits"].get<std::size_t>();
    CHECK(b <= a + 8);
  }

  // empty t list: header-only CSV
  auto empty = cmd_tradeoff_curve("spanning-tree", g, {}, 13, csv_path);
  CHECK(empty.exit_code == kExitPass);
  CHECK(slurp(csv_path) == "t,radius,cost_bits,ts_overhead_bits,error\n");

  CHECK(cmd_tradeoff_curve("bogus-base", g, {1}, 0, "").exit_code == kExitError);
}

TEST_CASE("binary exit code contract") {
  if (run_binary("--help") == -1) return;  // binary path not wired in
  auto g = tmp_path("bin_g.txt");
  CHECK(run_binary("gen path 12 --out " + g) == 0);
  CHECK(run_binary("verify --scheme string-share --graph " + g +
                   " --mode completeness --trials 2") == 0);
  CHECK(run_binary("gen bogus 3 --out /tmp/never.txt") == 2);
  CHECK(run_binary("partition algA --graph " + g + " --t 1 --budget 0") == 1);
  CHECK(run_binary("verify --scheme nope --graph " + g) == 2);
}
