#include "doctest.h"

#include <map>
#include <set>

#include "pls/partition.hpp"
#include "pls/rng.hpp"

using namespace pls;

TEST_CASE("radius function range, parity, determinism") {
  RadiusFunction r(123, 2, 64);
  int L = log2_ceil(64);
  CHECK(L == 6);
  CHECK(r.min_radius() == 2 * 2 * L + 2);
  CHECK(r.max_radius() == 8 * 2 * L);
  for (NodeId id = 0; id < 10000; ++id) {
    int v = r(id);
    CHECK(v >= r.min_radius());
    CHECK(v <= r.max_radius());
    CHECK(v % 2 == 0);
  }
  RadiusFunction r2(123, 2, 64);
  for (NodeId id = 0; id < 100; ++id) CHECK(r(id) == r2(id));
  RadiusFunction other(124, 2, 64);
  bool differs = false;
  for (NodeId id = 0; id < 100; ++id) differs |= (r(id) != other(id));
  CHECK(differs);
  CHECK_THROWS_AS(RadiusFunction(1, 0, 64), GraphError);
  CHECK_THROWS_AS(RadiusFunction(1, 1, 1), GraphError);
}

TEST_CASE("radius function is uniform within chi-square tolerance") {
  RadiusFunction r(7, 2, 64);
  const int bins = 3 * 2 * 6;  // one per even value in range
  std::vector<int> count(bins, 0);
  const int draws = 100000;
  for (NodeId id = 0; id < draws; ++id) {
    int v = r(id);
    ++count[(v - r.min_radius()) / 2];
  }
  double expected = double(draws) / bins;
  double chi2 = 0;
  for (int c : count) chi2 += (c - expected) * (c - expected) / expected;
  // df = 35; the 1e-4 tail sits near 79
  CHECK(chi2 < 80.0);
}

TEST_CASE("randomized carving on K4 always takes one cluster") {
  Graph k4;
  for (NodeId v = 0; v < 4; ++v) k4.add_node(v);
  for (NodeId u = 0; u < 4; ++u)
    for (NodeId v = u + 1; v < 4; ++v) k4.add_edge(u, v);
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    RadiusFunction r(seed, 1, 4);
    CarvingResult res = randomized_carving(k4, 1, r);
    REQUIRE(res.success);
    CHECK(res.partition.clusters.size() == 1);
    CHECK(res.partition.separating_set.empty());
    CHECK(res.taken == std::vector<NodeId>{0});
  }
}

TEST_CASE("successful carvings verify at (16tL, 1/t)") {
  Rng rng(31);
  int successes = 0;
  for (int trial = 0; trial < 60; ++trial) {
    std::size_t n = 16 + rng.below(64);
    Graph g = make_random_connected(n, n / 2, rng.next_u64());
    int t = 1 << rng.below(3);  // 1, 2, 4
    RadiusFunction r(rng.next_u64(), t, n);
    CarvingResult res = randomized_carving(g, t, r);
    if (!res.success) continue;
    ++successes;
    int L = log2_ceil(n);
    auto report = check_ts(g, res.partition, 16 * t * L, Rational(1, t));
    REQUIRE_MESSAGE(report.ok, "trial " << trial);
  }
  CHECK(successes >= 55);  // failures are rare at this scale
}

TEST_CASE("degenerate graphs are trivially partitioned") {
  Graph single;
  single.add_node(42);
  RadiusFunction r(0, 1, 2);
  CarvingResult res = randomized_carving(single, 1, r);
  REQUIRE(res.success);
  CHECK(res.partition.clusters == std::vector<Cluster>{{42}});
  CHECK(res.taken == std::vector<NodeId>{42});
  auto good = find_good_seed(single, 1, 4);
  REQUIRE(good.has_value());
  CHECK(good->seed == 0);
}

TEST_CASE("find_good_seed returns the first working seed and replays identically") {
  int first_try = 0;
  for (std::uint64_t trial = 0; trial < 100; ++trial) {
    Graph g = make_random_connected(32 + trial % 32, 16, trial);
    auto good = find_good_seed(g, 2, 16);
    REQUIRE(good.has_value());
    if (good->tries == 1) ++first_try;
    RadiusFunction r(good->seed, 2, g.node_count());
    CarvingResult a = randomized_carving(g, 2, r);
    CarvingResult b = randomized_carving(g, 2, r);
    REQUIRE(a.success);
    CHECK(a.partition.clusters == b.partition.clusters);
    CHECK(a.partition.separating_set == b.partition.separating_set);
    CHECK(a.taken == b.taken);
  }
  CHECK(first_try > 50);  // median tries is 1
}

TEST_CASE("find_my_cluster formula cases") {
  Graph g = make_path(8);
  RadiusFunction r(5, 1, 8);
  DistOracle oracle(g);
  // nobody taken: no cluster to find
  for (NodeId v : g.nodes())
    CHECK_FALSE(find_my_cluster(oracle, v, r, [](NodeId) { return false; }).has_value());
  // single taken node covering v
  auto only3 = [](NodeId u) { return u == 3; };
  for (NodeId v : g.nodes()) {
    auto got = find_my_cluster(oracle, v, r, only3);
    if (oracle.dist(3, v) <= r(3)) {
      REQUIRE(got.has_value());
      CHECK(*got == 3);
    } else {
      CHECK_FALSE(got.has_value());
    }
  }
}

TEST_CASE("find_my_cluster replays the carving") {
  Rng rng(77);
  for (int trial = 0; trial < 25; ++trial) {
    std::size_t n = 20 + rng.below(60);
    Graph g = make_random_connected(n, n / 2, rng.next_u64());
    int t = 1 + int(rng.below(2));
    auto good = find_good_seed(g, t, 16);
    REQUIRE(good.has_value());
    RadiusFunction r(good->seed, t, n);
    CarvingResult res = randomized_carving(g, t, r);
    REQUIRE(res.success);
    std::set<NodeId> taken(res.taken.begin(), res.taken.end());
    auto in_t = [&taken](NodeId u) { return taken.count(u) != 0; };
    DistOracle oracle(g);
    // every node resolves to the center whose accepted cluster contains it
    for (std::size_t k = 0; k < res.partition.clusters.size(); ++k) {
      for (NodeId v : res.partition.clusters[k]) {
        auto got = find_my_cluster(oracle, v, r, in_t);
        REQUIRE(got.has_value());
        CHECK(*got == res.taken[k]);
      }
    }
    // nodes resolving to the same center are near each other
    int L = log2_ceil(n);
    for (const Cluster& c : res.partition.clusters)
      CHECK(weak_diameter(oracle, c) <= 16 * t * L);
  }
}

TEST_CASE("shared cluster centers imply bounded distance for any taken set") {
  // the min-formula caps the search ball, so two nodes resolving to the
  // same center are within 16 t log n of each other no matter the bits
  Rng rng(123);
  for (int trial = 0; trial < 20; ++trial) {
    std::size_t n = 24 + rng.below(40);
    Graph g = make_random_connected(n, n / 3, rng.next_u64());
    int t = 1 + int(rng.below(2));
    RadiusFunction r(rng.next_u64(), t, n);
    std::set<NodeId> taken;
    for (NodeId v : g.nodes())
      if (rng.below(4) == 0) taken.insert(v);
    auto in_t = [&taken](NodeId u) { return taken.count(u) != 0; };
    DistOracle oracle(g);
    std::map<NodeId, std::vector<NodeId>> by_center;
    for (NodeId v : g.nodes()) {
      auto got = find_my_cluster(oracle, v, r, in_t);
      if (got) by_center[*got].push_back(v);
    }
    int bound = 16 * t * log2_ceil(n);
    for (auto& [center, members] : by_center)
      for (NodeId a : members)
        for (NodeId b : members) CHECK(oracle.dist(a, b) <= bound);
  }
}

TEST_CASE("empirical failure rate is far below the analytical bound") {
  Graph g = make_random_connected(64, 32, 99);
  int failures = 0;
  const int seeds = 1000;
  for (std::uint64_t seed = 0; seed < seeds; ++seed) {
    RadiusFunction r(seed, 1, 64);
    if (!randomized_carving(g, 1, r).success) ++failures;
  }
  double rate = double(failures) / seeds;
  double bound = 1.0 / 64 + 3 * std::sqrt((1.0 / 64) / seeds);
  CHECK(rate <= bound);
}
