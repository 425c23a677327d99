#pragma once

#include <functional>
#include <optional>

#include "pls/rational.hpp"
#include "pls/scheme.hpp"

namespace pls {

/// Aux output of an accepting TS-certifying verifier: the clusters within
/// two hops of the node's own cluster, the separating-set members of each,
/// and which entry is the node's own cluster.
struct TsOutput {
  std::vector<Cluster> clusters;
  std::vector<std::vector<NodeId>> x_sets;  // parallel to clusters
  int own = -1;

  const Cluster& own_cluster() const { return clusters.at(own); }
};

using PartitionProvider = std::function<std::optional<TsPartition>(const Graph&)>;

/// Provider backed by the greedy carving: tries carving strengths until the
/// result verifies at (t, eps).
PartitionProvider warmup_provider(int t, Rational eps);

/// Certification with O(log n)-bit labels (cluster id + separating bit),
/// verification radius 3t+2. The verifier reconstructs every cluster within
/// two hops of its own by matching cluster ids, then asserts weak diameter
/// <= t, cost ratio <= eps, and that no two non-separating nodes of
/// different clusters sit within distance two. Accepting nodes output a
/// TsOutput; if every node accepts those outputs describe one valid
/// (t, eps)-two-separated partition.
Scheme make_ts_cert_logn(int t, Rational eps, PartitionProvider provider);
Scheme make_ts_cert_logn(int t, Rational eps);

/// Certification with O(1)-bit labels: the prover searches for a seed whose
/// randomized carving succeeds, shares (n, seed) through the string-sharing
/// sublabels, and marks taken centers and separating nodes with two bits.
/// Verifiers re-derive the radius function from the shared pair, locate
/// their cluster with find_my_cluster, and assert the partition properties
/// at (16 t log n, 1/t). Requires a connected graph with n > 24.
Scheme make_ts_cert_const(int t, std::size_t n, int seed_tries = 64);

/// Cluster size used by the embedded sharing labels of the constant-cost
/// scheme (the shared string is VLQ(n) ++ VLQ(seed), at most this long).
inline constexpr int kConstShareR = 24;

/// Verification radius of make_ts_cert_const for a given (t, n).
int ts_cert_const_radius(int t, std::size_t n);

/// Ground-truth Comp(v) of a partition: the clusters within two hops of the
/// cluster containing v (test oracle for the schemes above).
TsOutput expected_ts_output(const Graph& g, const TsPartition& p, NodeId v);

}  // namespace pls
