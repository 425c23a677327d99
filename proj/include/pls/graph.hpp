#pragma once

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "pls/bits.hpp"

namespace pls {

using NodeId = std::uint64_t;

/// Distance value for unreachable pairs. Finite hop counts are far smaller.
inline constexpr int kInfDist = std::numeric_limits<int>::max();

struct GraphError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Undirected graph over arbitrary (not necessarily contiguous) node ids.
/// No self-loops, no parallel edges; adjacency is kept symmetric. Nodes and
/// neighbor lists are exposed in increasing id order, which is the
/// "lexicographic" order used by every algorithm in this project.
class Graph {
 public:
  Graph() = default;

  void add_node(NodeId v);
  void add_edge(NodeId u, NodeId v);

  bool has_node(NodeId v) const { return index_.count(v) != 0; }
  bool has_edge(NodeId u, NodeId v) const;

  std::size_t node_count() const { return ids_.size(); }
  std::size_t edge_count() const { return edge_count_; }

  /// Node ids in increasing order.
  const std::vector<NodeId>& nodes() const { return ids_; }
  /// Neighbor ids of v in increasing order.
  std::vector<NodeId> neighbors(NodeId v) const;
  std::size_t degree(NodeId v) const;

  friend bool operator==(const Graph& a, const Graph& b);

  // Dense-index access used by the traversal helpers.
  int index_of(NodeId v) const;
  NodeId id_at(int idx) const { return ids_[idx]; }
  const std::vector<int>& adj_at(int idx) const { return adj_[idx]; }

 private:
  std::vector<NodeId> ids_;                    // sorted
  std::unordered_map<NodeId, int> index_;      // id -> position in ids_
  std::vector<std::vector<int>> adj_;          // by dense index, sorted
  std::size_t edge_count_ = 0;
};

/// BFS distances from src to every node, by dense index; kInfDist where
/// unreachable.
std::vector<int> bfs_distances(const Graph& g, NodeId src);

/// Per-graph BFS cache. Not shared between threads; build one per task.
class DistOracle {
 public:
  explicit DistOracle(const Graph& g) : g_(&g) {}
  int dist(NodeId u, NodeId v) const;
  const std::vector<int>& from(NodeId src) const;
  const Graph& graph() const { return *g_; }

 private:
  const Graph* g_;
  mutable std::unordered_map<int, std::vector<int>> cache_;
};

int dist(const Graph& g, NodeId u, NodeId v);

/// B_t(v): all nodes within hop distance t, in increasing id order.
std::vector<NodeId> ball(const Graph& g, NodeId v, int t);
std::vector<NodeId> ball(const DistOracle& oracle, NodeId v, int t);

/// Union of balls around a node set; the set itself is contained for t >= 0.
std::vector<NodeId> ball_of_set(const Graph& g, const std::vector<NodeId>& s, int t);

/// A cluster is a non-empty node subset, kept sorted by id. Clusters may be
/// internally disconnected; distances are always measured in the full graph.
using Cluster = std::vector<NodeId>;

/// Max pairwise distance in the full graph; kInfDist across components.
int weak_diameter(const Graph& g, const Cluster& c);
int weak_diameter(const DistOracle& oracle, const Cluster& c);

/// Maximal connected components of the induced subgraph G[s].
std::vector<Cluster> induced_components(const Graph& g, const std::vector<NodeId>& s);

/// Graph plus per-node input strings (total map, empty string allowed).
struct Configuration {
  Graph graph;
  std::unordered_map<NodeId, BitString> input;

  static Configuration plain(Graph g);
  const BitString& input_of(NodeId v) const;
};

// --- generators ------------------------------------------------------------

Graph make_path(std::size_t n);
Graph make_cycle(std::size_t n);
Graph make_grid(std::size_t rows, std::size_t cols);
Graph make_random_tree(std::size_t n, std::uint64_t seed);
Graph make_random_connected(std::size_t n, std::size_t extra_edges, std::uint64_t seed);

/// Layered graph with 2t+3 layers: odd layers carry one node, even layers m
/// nodes, consecutive layers completely joined. Requires t >= 1 and odd
/// m >= 3. Ids are assigned layer by layer starting at 0.
Graph make_layered(int t, int m);

/// Layer index (1-based) of a node of make_layered(t, m).
int layered_layer_of(NodeId v, int t, int m);
/// Nodes of one layer, increasing id order.
std::vector<NodeId> layered_layer(int layer, int t, int m);

struct GenParams {
  std::vector<std::uint64_t> values;
};

/// Dispatch by kind name: path, cycle, grid, random_connected, random_tree,
/// layered. Throws GraphError on bad kind or params.
Graph generate(const std::string& kind, const GenParams& params, std::uint64_t seed);

}  // namespace pls
