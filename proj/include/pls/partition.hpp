#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "pls/graph.hpp"
#include "pls/rational.hpp"

namespace pls {

/// Partition of the node set together with a separating set X. A valid
/// (t, eps)-two-separated partition additionally satisfies:
///   (a) every cluster has weak diameter <= t,
///   (b) max_i |C_i ∩ X| / |C_i| <= eps (the cost ratio),
///   (c) two-separation: every path between non-X nodes of two distinct
///       clusters crosses an edge with both endpoints in X.
struct TsPartition {
  std::vector<Cluster> clusters;
  std::vector<NodeId> separating_set;  // sorted
};

/// Partition whose cluster order matters (carving order).
struct OrderedPartition {
  std::vector<Cluster> clusters;
};

struct TsCheckReport {
  bool ok = false;
  std::vector<std::string> violations;
  int max_weak_diameter = 0;       // kInfDist if some cluster is split across components
  Rational cost_ratio;             // max |C ∩ X| / |C|
  bool two_separated = false;
};

/// ceil(log2 n), with log of 1 pinned to 1 so radius ranges stay non-empty.
int log2_ceil(std::size_t n);

/// Validate structure (throws GraphError if not a partition of g's nodes)
/// and evaluate the three two-separated-partition conditions. eps is an
/// inclusive bound compared in exact rational arithmetic. Two-separation is
/// decided by deleting every edge with both endpoints in X and requiring
/// that no remaining component contains non-X nodes of two clusters.
TsCheckReport check_ts(const Graph& g, const TsPartition& p, int t, const Rational& eps);

/// max over i of |{v in C_i : dist(v, union of later clusters) <= 2}| / |C_i|.
Rational cluster_degeneracy(const Graph& g, const OrderedPartition& p);

/// X = union over i of C_i ∩ B_2(union of later clusters). For an ordered
/// partition with degeneracy eps and weak diameter <= t this yields a
/// (t, eps)-two-separated partition.
TsPartition degeneracy_to_ts(const Graph& g, const OrderedPartition& p);

/// Greedy ball carving: repeatedly grow even radii around the smallest alive
/// id until the alive ball stops expanding by more than a (1 + 1/t) factor
/// per two hops, then carve. Output has cluster degeneracy <= 1/t and every
/// cluster weak diameter <= 16 t ceil(log2 n).
OrderedPartition warmup_carving(const Graph& g, int t);

struct PaddedSample {
  OrderedPartition partition;
  int lambda = 0;  // weak-diameter bound; holds per construction
};

/// One draw of a truncated-exponential ball-carving partition: nodes are
/// visited in seeded random order, each still-alive node carves the alive
/// part of a ball with radius ~ TruncExp(beta/lambda) capped at lambda/2.
PaddedSample sample_padded(const Graph& g, int lambda, double beta, std::uint64_t seed);

struct PaddedCarvingResult {
  bool success = false;
  OrderedPartition partition;        // valid when success
  Rational best_ratio;               // best boundary ratio seen in the failing step
  int steps = 0;
  int resamples_used = 0;            // total across steps
};

/// Iterative carving via repeated padded samples restricted to the alive
/// set: a sampled cluster C qualifies when |C ∩ B_2(L \ C)| <= (2 beta / t)|C|;
/// per sample the candidate is the cluster minimizing that ratio. Fails
/// (success=false, diagnostics filled) if a step exhausts max_resamples.
PaddedCarvingResult padded_carving(const Graph& g, int t, double beta, std::uint64_t seed,
                                   int max_resamples);

/// Deterministic map from node ids to even radii in [2tL+2, 8tL], L =
/// ceil(log2 n), keyed by (seed, t, n).
class RadiusFunction {
 public:
  RadiusFunction(std::uint64_t seed, int t, std::size_t n);

  int operator()(NodeId id) const;
  std::uint64_t seed() const { return seed_; }
  int t() const { return t_; }
  std::size_t n() const { return n_; }
  int log_n() const { return log_n_; }
  int min_radius() const { return 2 * t_ * log_n_ + 2; }
  int max_radius() const { return 8 * t_ * log_n_; }

 private:
  std::uint64_t seed_;
  int t_;
  std::size_t n_;
  int log_n_;
};

struct CarvingResult {
  bool success = false;
  TsPartition partition;      // valid when success
  std::vector<NodeId> taken;  // centers whose candidate cluster was accepted
  std::vector<NodeId> alive;  // non-empty iff failure
};

/// Sequential carving with seeded per-id radii: iterate all nodes in id
/// order (clustered ones included); skip v when no alive node is within
/// 2tL hops; otherwise carve B_{R(v)}(v) ∩ alive whenever the ball is
/// non-expanding. Success means the alive set drains; the result is then
/// a (16 t L, 1/t)-two-separated partition.
CarvingResult randomized_carving(const Graph& g, int t, const RadiusFunction& radii);

struct GoodSeed {
  std::uint64_t seed = 0;
  int tries = 0;  // 1-based index of the successful attempt
};

/// Smallest seed in {start, start+1, ...} whose carving succeeds and passes
/// check_ts at (16 t L, 1/t). nullopt when max_tries seeds all fail.
std::optional<GoodSeed> find_good_seed(const Graph& g, int t, int max_tries,
                                       std::uint64_t start = 0);

/// Smallest id of a taken node u with dist(u, v) <= R(id(u)) within the
/// 8tL-ball of v; nullopt when no such node exists. With in_t = the taken
/// set of a successful carving this recovers v's cluster center.
std::optional<NodeId> find_my_cluster(const DistOracle& oracle, NodeId v,
                                      const RadiusFunction& radii,
                                      const std::function<bool(NodeId)>& in_t);

// Text serialization: `c <index> <id>...` lines then one `x <id>...` line.
void write_partition(std::ostream& os, const TsPartition& p);
TsPartition read_partition(std::istream& is);

}  // namespace pls
