#include "doctest.h"

#include <any>

#include "pls/rng.hpp"
#include "pls/schemes/spanning_tree.hpp"
#include "pls/lex.hpp"
#include "pls/schemes/tradeoff.hpp"

using namespace pls;

namespace {

Scheme logn_ts_for(const Graph& g) {
  int L = log2_ceil(g.node_count());
  return make_ts_cert_logn(32 * L, Rational(1, 2));
}

}  // namespace

TEST_CASE("compiled scheme is complete with the hook solver") {
  Scheme base = make_spanning_tree_pls();
  for (std::uint64_t seed = 0; seed < 6; ++seed) {
    Graph g = make_random_connected(18 + seed * 4, 9, seed);
    Configuration cfg = spanning_tree_instance(g, seed);
    Scheme ts = logn_ts_for(g);
    Scheme compiled = compile_tradeoff(base, ts, ExtensionSolver::hook());
    CHECK(compiled.t == ts.t);
    Labeling labels = compiled.prover(cfg);
    auto verdicts = run_scheme(compiled, cfg, labels);
    REQUIRE_MESSAGE(all_accept(verdicts), "seed " << seed);
  }
}

TEST_CASE("compiled scheme is complete with the exhaustive solver on a tiny base") {
  // a toy radius-1 scheme with empty honest labels keeps the extension
  // search space to the single empty assignment
  Scheme tiny;
  tiny.name = "empty-labels";
  tiny.t = 1;
  tiny.prover = [](const Configuration& cfg) {
    Labeling l;
    for (NodeId v : cfg.graph.nodes()) l[v] = Label();
    return l;
  };
  tiny.verifier = [](const LocalView& view) {
    for (NodeId u : view.subgraph.nodes())
      if (!view.label_of(u).empty()) return Verdict::reject();
    return Verdict::accept();
  };
  Graph g = make_random_connected(16, 8, 2);
  Configuration cfg = Configuration::plain(g);
  Scheme compiled = compile_tradeoff(tiny, logn_ts_for(g), ExtensionSolver::exhaustive(0));
  Labeling labels = compiled.prover(cfg);
  CHECK(all_accept(run_scheme(compiled, cfg, labels)));
}

TEST_CASE("construction preconditions") {
  Scheme base = make_spanning_tree_pls();
  Scheme ts = make_ts_cert_logn(64, Rational(1, 2));
  Scheme not_one = base;
  not_one.t = 2;
  CHECK_THROWS_AS(compile_tradeoff(not_one, ts, ExtensionSolver::hook()), SchemeError);
  Scheme no_partition = base;  // radius 1 but no partition provider
  CHECK_THROWS_AS(compile_tradeoff(base, no_partition, ExtensionSolver::hook()), SchemeError);
  Scheme hookless = base;
  hookless.extension_hook = nullptr;
  CHECK_THROWS_AS(compile_tradeoff(hookless, ts, ExtensionSolver::hook()), SchemeError);
}

TEST_CASE("compilation over the constant-cost certifier verifies end to end") {
  Scheme base = make_spanning_tree_pls();
  // t = 1 on a cycle (several clusters, boundary labels in play)
  {
    Graph g = make_cycle(48);
    Configuration cfg = spanning_tree_instance(g, 3);
    Scheme ts = make_ts_cert_const(1, 48);
    Scheme compiled = compile_tradeoff(base, ts, ExtensionSolver::hook());
    CHECK(all_accept(run_scheme(compiled, cfg, compiled.prover(cfg))));
  }
  // t = 2 on a random graph
  {
    Graph g = make_random_connected(36, 18, 15);
    Configuration cfg = spanning_tree_instance(g, 15);
    Scheme ts = make_ts_cert_const(2, 36);
    Scheme compiled = compile_tradeoff(base, ts, ExtensionSolver::hook());
    CHECK(all_accept(run_scheme(compiled, cfg, compiled.prover(cfg))));
  }
}

TEST_CASE("empty separating set: proof parts are padding only") {
  // a star has a single-cluster partition with X = ∅ at eps = 0, so the
  // compiled label is the ts label plus an all-padding block
  Graph star;
  star.add_node(0);
  for (NodeId v = 1; v <= 8; ++v) {
    star.add_node(v);
    star.add_edge(0, v);
  }
  Configuration cfg = spanning_tree_instance(star, 2);
  int L = log2_ceil(star.node_count());
  Scheme ts = make_ts_cert_logn(16 * L, Rational::zero());
  TsPartition p = ts.prover_partition(cfg);
  CHECK(p.separating_set.empty());
  Scheme base = make_spanning_tree_pls();
  Scheme compiled = compile_tradeoff(base, ts, ExtensionSolver::hook());
  Labeling labels = compiled.prover(cfg);
  CHECK(all_accept(run_scheme(compiled, cfg, labels)));
  std::size_t ts_cost = scheme_cost(ts, {cfg});
  for (NodeId v : star.nodes()) {
    auto parts = BitString::decode_tuple(labels.at(v));
    REQUIRE(parts.has_value());
    REQUIRE(parts->size() == 2);
    CHECK((*parts)[1].size() == 1);  // single padding bit
  }
  CHECK(scheme_cost(compiled, {cfg}) <= ts_cost + 16 + 1);  // tuple framing + pad
}

TEST_CASE("compiled cost tracks eps times base cost") {
  Scheme base = make_spanning_tree_pls();
  Graph g = make_random_connected(64, 32, 5);
  Configuration cfg = spanning_tree_instance(g, 5);
  std::size_t p = scheme_cost(base, {cfg});
  CHECK(p == std::size_t(kTreeLabelBits));
  Scheme ts = logn_ts_for(g);
  Scheme compiled = compile_tradeoff(base, ts, ExtensionSolver::hook());
  Labeling labels = compiled.prover(cfg);
  TsPartition part = ts.prover_partition(cfg);
  // worst block: ceil((eps * (p + 8) * |C| + 1) / |C|) at eps = 1/2
  std::size_t cost = 0;
  for (auto& [v, l] : labels) cost = std::max(cost, l.size());
  std::size_t ts_cost = scheme_cost(ts, {cfg});
  CHECK(cost <= 16 + ts_cost + (p + 8) / 2 + 2);
}

TEST_CASE("nodes surrounded by the separating set run the base verifier themselves") {
  // path 0..9, clusters {0..4} and {5..9}, X = {3,4,5,6}: nodes 4 and 5 have
  // their whole closed neighborhood inside X. Corrupting the parent field of
  // the boundary label decoded for node 4 is invisible to every other check
  // (its neighbors still see consistent distances), so the rejection must
  // come from node 4's own run of the base verifier.
  Graph p10 = make_path(10);
  TsPartition part{{{0, 1, 2, 3, 4}, {5, 6, 7, 8, 9}}, {3, 4, 5, 6}};
  REQUIRE(check_ts(p10, part, 4, Rational(2, 5)).ok);
  Scheme ts = make_ts_cert_logn(4, Rational(2, 5), [part](const Graph&) { return part; });
  Scheme base = make_spanning_tree_pls();
  Scheme compiled = compile_tradeoff(base, ts, ExtensionSolver::hook());

  Configuration cfg;  // the path itself as the designated tree
  cfg.graph = p10;
  std::vector<std::pair<NodeId, NodeId>> edges;
  for (NodeId v = 0; v + 1 < 10; ++v) edges.push_back({v, v + 1});
  cfg.input = encode_tree_input(p10, edges);
  REQUIRE(spanning_tree_predicate(cfg));

  Labeling labels = compiled.prover(cfg);
  REQUIRE(all_accept(run_scheme(compiled, cfg, labels)));

  // rebuild cluster 0's boundary tuple with ell_X(4).parent = 5
  Labeling base_labels = base.prover(cfg);
  Label bad4 = BitString::from_uint(0, kTreeIdBits);
  bad4.append(BitString::from_uint(5, kTreeIdBits));
  bad4.append(BitString::from_uint(4, kTreeIdBits));
  BitString xlabel = BitString::encode_tuple({base_labels.at(3), bad4});
  Cluster c0 = {0, 1, 2, 3, 4};
  for (NodeId v : c0) {
    auto parts = BitString::decode_tuple(labels.at(v));
    REQUIRE(parts.has_value());
    labels[v] = BitString::encode_tuple({(*parts)[0], lex_encode(c0, xlabel, v)});
  }
  auto verdicts = run_scheme(compiled, cfg, labels);
  CHECK_FALSE(verdicts.at(4).accepted);
  int rejecters = 0;
  for (auto& [v, verdict] : verdicts)
    if (!verdict.accepted) ++rejecters;
  CHECK(rejecters == 1);  // only the surrounded node can tell

  // a tuple with the wrong string count trips the leader of the cluster
  // (node 2, the max id outside X in {0..4})
  Labeling miscount = compiled.prover(cfg);
  BitString single = BitString::encode_tuple({base_labels.at(3)});
  for (NodeId v : c0) {
    auto parts = BitString::decode_tuple(miscount.at(v));
    REQUIRE(parts.has_value());
    miscount[v] = BitString::encode_tuple({(*parts)[0], lex_encode(c0, single, v)});
  }
  auto verdicts2 = run_scheme(compiled, cfg, miscount);
  CHECK_FALSE(verdicts2.at(2).accepted);
}

TEST_CASE("hook candidates are re-validated, so a lying hook cannot create acceptance") {
  Scheme base = make_spanning_tree_pls();
  Scheme lying = base;
  lying.extension_hook = [](const ExtensionRequest& req) -> std::optional<Labeling> {
    Labeling out = req.fixed;
    for (NodeId v : req.free_nodes) out[v] = BitString::from_string("1");
    return out;  // nonsense labels
  };
  Graph g = make_random_connected(18, 8, 4);
  Configuration cfg = spanning_tree_instance(g, 4);
  Scheme compiled = compile_tradeoff(lying, logn_ts_for(g), ExtensionSolver::hook());
  Labeling labels = compiled.prover(cfg);
  auto verdicts = run_scheme(compiled, cfg, labels);
  // leaders reject the garbage extension; nothing accepts on their behalf
  bool some_reject = false;
  for (auto& [v, verdict] : verdicts) some_reject = some_reject || !verdict.accepted;
  CHECK(some_reject);
}

TEST_CASE("solver budget exhaustion is an error, not a reject") {
  Scheme base = make_spanning_tree_pls();
  Graph g = make_random_connected(20, 8, 9);
  Configuration cfg = spanning_tree_instance(g, 9);
  Scheme ts = logn_ts_for(g);
  Scheme compiled = compile_tradeoff(base, ts, ExtensionSolver::exhaustive(2, /*budget=*/1));
  Labeling labels = compiled.prover(cfg);
  CHECK_THROWS_AS(run_scheme(compiled, cfg, labels), BudgetError);
}

TEST_CASE("micro exhaustive soundness of the compiled scheme") {
  // 6-node cycle, designated edges form a path (forest): predicate false;
  // no labeling with labels up to 2 bits may convince everyone
  Graph c6 = make_cycle(6);
  std::vector<std::pair<NodeId, NodeId>> forest = {{0, 1}, {1, 2}, {3, 4}};
  Configuration cfg;
  cfg.graph = c6;
  cfg.input = encode_tree_input(c6, forest);
  REQUIRE_FALSE(spanning_tree_predicate(cfg));
  Scheme compiled = compile_tradeoff(make_spanning_tree_pls(), logn_ts_for(c6),
                                     ExtensionSolver::exhaustive(3));
  auto report = check_soundness_exhaustive(compiled, spanning_tree_predicate, cfg, 2,
                                           std::uint64_t(1) << 26);
  CHECK(report.status == SearchStatus::none);
  CHECK(report.ok);
}

TEST_CASE("fuzzed compiled scheme on invalid instances") {
  Graph g = make_random_connected(14, 6, 21);
  Configuration valid = spanning_tree_instance(g, 21);
  auto edges = designated_edges(valid);
  edges.erase(edges.begin() + 2);
  Configuration cfg;
  cfg.graph = g;
  cfg.input = encode_tree_input(g, edges);
  REQUIRE_FALSE(spanning_tree_predicate(cfg));

  Scheme compiled = compile_tradeoff(make_spanning_tree_pls(), logn_ts_for(g),
                                     ExtensionSolver::hook());
  FuzzOptions options;
  options.trials = 10000;
  options.seed = 31;
  options.random_bits_cap = 24;
  options.nearby_honest = compiled.prover(valid);
  auto report = check_soundness_fuzz(compiled, spanning_tree_predicate, cfg, options);
  CHECK(report.ok);
  CHECK(report.trials_run == 10000);
}
