#include "doctest.h"

#include "pls/rng.hpp"
#include "pls/schemes/spanning_tree.hpp"
#include "pls/search.hpp"

using namespace pls;

namespace {

Configuration star_instance() {
  Graph g;
  for (NodeId v = 0; v < 6; ++v) g.add_node(v);
  for (NodeId v = 1; v < 6; ++v) g.add_edge(0, v);
  std::vector<std::pair<NodeId, NodeId>> edges;
  for (NodeId v = 1; v < 6; ++v) edges.push_back({0, v});
  Configuration cfg;
  cfg.graph = g;
  cfg.input = encode_tree_input(g, edges);
  return cfg;
}

}  // namespace

TEST_CASE("predicate ground truth") {
  Configuration star = star_instance();
  CHECK(spanning_tree_predicate(star));

  // drop one designated edge: a forest is not a spanning tree
  auto edges = designated_edges(star);
  edges.pop_back();
  Configuration forest;
  forest.graph = star.graph;
  forest.input = encode_tree_input(forest.graph, edges);
  CHECK_FALSE(spanning_tree_predicate(forest));

  // designate a cycle
  Graph c4 = make_cycle(4);
  std::vector<std::pair<NodeId, NodeId>> cyc = {{0, 1}, {1, 2}, {2, 3}, {3, 0}};
  Configuration cycle_cfg;
  cycle_cfg.graph = c4;
  cycle_cfg.input = encode_tree_input(c4, cyc);
  CHECK_FALSE(spanning_tree_predicate(cycle_cfg));
}

TEST_CASE("star completeness: every leaf at distance one") {
  Configuration star = star_instance();
  Scheme s = make_spanning_tree_pls();
  Labeling labels = s.prover(star);
  CHECK(all_accept(run_scheme(s, star, labels)));
  for (NodeId v = 1; v < 6; ++v)
    CHECK(labels.at(v).to_uint(2 * kTreeIdBits, kTreeIdBits) == 1);
  CHECK(labels.at(0).to_uint(2 * kTreeIdBits, kTreeIdBits) == 0);
}

TEST_CASE("random instances are complete") {
  Scheme s = make_spanning_tree_pls();
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    Graph g = make_random_connected(10 + seed, 6, seed);
    Configuration cfg = spanning_tree_instance(g, seed);
    REQUIRE(spanning_tree_predicate(cfg));
    CHECK(all_accept(run_scheme(s, cfg, s.prover(cfg))));
  }
}

TEST_CASE("corrupting one distance field is noticed locally") {
  Scheme s = make_spanning_tree_pls();
  Graph p6 = make_path(6);
  Configuration cfg = spanning_tree_instance(p6, 4);
  Labeling labels = s.prover(cfg);
  // overwrite node 3's distance with garbage
  NodeId root = NodeId(labels.at(3).to_uint(0, kTreeIdBits));
  NodeId parent = NodeId(labels.at(3).to_uint(kTreeIdBits, kTreeIdBits));
  Label forged = BitString::from_uint(root, kTreeIdBits);
  forged.append(BitString::from_uint(parent, kTreeIdBits));
  forged.append(BitString::from_uint(5, kTreeIdBits));
  labels[3] = forged;
  auto verdicts = run_scheme(s, cfg, labels);
  bool neighborhood_rejects = !verdicts.at(3).accepted || !verdicts.at(2).accepted ||
                              !verdicts.at(4).accepted;
  CHECK(neighborhood_rejects);
}

TEST_CASE("prover refuses invalid instances") {
  Graph c4 = make_cycle(4);
  std::vector<std::pair<NodeId, NodeId>> cyc = {{0, 1}, {1, 2}, {2, 3}, {3, 0}};
  Configuration cfg;
  cfg.graph = c4;
  cfg.input = encode_tree_input(c4, cyc);
  CHECK_THROWS_AS(make_spanning_tree_pls().prover(cfg), SchemeError);
}

TEST_CASE("exhaustive soundness on tiny invalid instances") {
  Scheme s = make_spanning_tree_pls();
  // 5-cycle with a designated path of 3 edges: forest, predicate false.
  // Honest labels are 96 bits, far beyond this bound, so rejection must
  // come from the format checks; the point is that nothing slips through.
  Graph c5 = make_cycle(5);
  std::vector<std::pair<NodeId, NodeId>> path_edges = {{0, 1}, {1, 2}, {2, 3}};
  Configuration cfg;
  cfg.graph = c5;
  cfg.input = encode_tree_input(c5, path_edges);
  REQUIRE_FALSE(spanning_tree_predicate(cfg));
  auto r = check_soundness_exhaustive(s, spanning_tree_predicate, cfg, 2);
  CHECK(r.ok);
}

TEST_CASE("fuzzed forgeries of invalid instances never all-accept") {
  Scheme s = make_spanning_tree_pls();
  Graph g = make_random_connected(12, 5, 8);
  Configuration valid = spanning_tree_instance(g, 8);
  auto edges = designated_edges(valid);
  edges.erase(edges.begin());
  Configuration cfg;
  cfg.graph = g;
  cfg.input = encode_tree_input(g, edges);
  REQUIRE_FALSE(spanning_tree_predicate(cfg));

  FuzzOptions options;
  options.trials = 2000;
  options.seed = 77;
  options.random_bits_cap = 2 * kTreeLabelBits;
  options.nearby_honest = s.prover(valid);
  auto report = check_soundness_fuzz(s, spanning_tree_predicate, cfg, options);
  CHECK(report.ok);
}

TEST_CASE("extension hook reconstructs labels from boundary anchors") {
  Scheme s = make_spanning_tree_pls();
  Graph g = make_path(8);
  Configuration cfg = spanning_tree_instance(g, 3);
  Labeling honest = s.prover(cfg);

  LocalView whole = extract_view(cfg, honest, 0, 8);
  ExtensionRequest req;
  req.view = &whole;
  req.cluster = {2, 3, 4};
  req.free_nodes = {3};  // nodes 2 and 4 act as fixed boundary
  req.fixed[2] = honest.at(2);
  req.fixed[4] = honest.at(4);
  req.must_accept = {2, 3, 4};
  auto found = s.extension_hook(req);
  REQUIRE(found.has_value());
  CHECK(found->at(3) == honest.at(3));

  // no boundary at all: the hook roots the region itself
  ExtensionRequest whole_req;
  whole_req.view = &whole;
  whole_req.cluster = g.nodes();
  whole_req.free_nodes = g.nodes();
  for (NodeId v : g.nodes()) whole_req.must_accept.push_back(v);
  auto full = s.extension_hook(whole_req);
  REQUIRE(full.has_value());
  Labeling candidate = *full;
  CHECK(all_accept(run_scheme(s, cfg, candidate)));
}
