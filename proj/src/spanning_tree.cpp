#include "pls/schemes/spanning_tree.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <queue>
#include <set>

#include "pls/rng.hpp"

namespace pls {

namespace {

std::vector<NodeId> parse_tree_list(const BitString& input) {
  std::vector<NodeId> out;
  if (input.size() % kTreeIdBits != 0) return out;  // malformed lists designate nothing
  for (std::size_t pos = 0; pos < input.size(); pos += kTreeIdBits)
    out.push_back(input.to_uint(pos, kTreeIdBits));
  return out;
}

bool lists(const BitString& input, NodeId v) {
  auto ids = parse_tree_list(input);
  return std::find(ids.begin(), ids.end(), v) != ids.end();
}

struct TreeLabel {
  NodeId root;
  NodeId parent;
  std::uint64_t dist;
};

std::optional<TreeLabel> parse_label(const Label& l) {
  if (l.size() != kTreeLabelBits) return std::nullopt;
  return TreeLabel{l.to_uint(0, kTreeIdBits), l.to_uint(kTreeIdBits, kTreeIdBits),
                   l.to_uint(2 * kTreeIdBits, kTreeIdBits)};
}

Label make_label(NodeId root, NodeId parent, std::uint64_t dist) {
  Label l = BitString::from_uint(root, kTreeIdBits);
  l.append(BitString::from_uint(parent, kTreeIdBits));
  l.append(BitString::from_uint(dist, kTreeIdBits));
  return l;
}

/// Tree neighbors of v among the nodes present in g (mutual listings).
std::vector<NodeId> tree_neighbors(const Graph& g,
                                   const std::unordered_map<NodeId, BitString>& inputs,
                                   NodeId v) {
  std::vector<NodeId> out;
  auto iv = inputs.find(v);
  if (iv == inputs.end()) return out;
  for (NodeId u : parse_tree_list(iv->second)) {
    if (!g.has_node(u) || !g.has_edge(v, u)) continue;
    auto iu = inputs.find(u);
    if (iu != inputs.end() && lists(iu->second, v)) out.push_back(u);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

std::vector<std::pair<NodeId, NodeId>> designated_edges(const Configuration& cfg) {
  std::vector<std::pair<NodeId, NodeId>> edges;
  for (NodeId v : cfg.graph.nodes())
    for (NodeId u : tree_neighbors(cfg.graph, cfg.input, v))
      if (v < u) edges.push_back({v, u});
  return edges;
}

bool spanning_tree_predicate(const Configuration& cfg) {
  const std::size_t n = cfg.graph.node_count();
  auto edges = designated_edges(cfg);
  if (n == 0 || edges.size() != n - 1) return false;
  // connectivity over designated edges
  std::map<NodeId, std::vector<NodeId>> adj;
  for (auto [a, b] : edges) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  std::set<NodeId> seen{cfg.graph.nodes().front()};
  std::deque<NodeId> queue{cfg.graph.nodes().front()};
  while (!queue.empty()) {
    NodeId v = queue.front();
    queue.pop_front();
    for (NodeId u : adj[v])
      if (seen.insert(u).second) queue.push_back(u);
  }
  return seen.size() == n;
}

std::unordered_map<NodeId, BitString> encode_tree_input(
    const Graph& g, const std::vector<std::pair<NodeId, NodeId>>& edges) {
  std::map<NodeId, std::set<NodeId>> listing;
  for (NodeId v : g.nodes()) listing[v];
  for (auto [a, b] : edges) {
    listing[a].insert(b);
    listing[b].insert(a);
  }
  std::unordered_map<NodeId, BitString> input;
  for (auto& [v, ids] : listing) {
    BitString s;
    for (NodeId u : ids) s.append(BitString::from_uint(u, kTreeIdBits));
    input[v] = s;
  }
  return input;
}

Configuration spanning_tree_instance(const Graph& g, std::uint64_t seed) {
  // randomized BFS tree: random root, neighbor order shuffled per node
  Rng rng(derive_seed(seed, 0x73747265ULL));
  const auto& nodes = g.nodes();
  NodeId root = nodes[rng.below(nodes.size())];
  std::set<NodeId> seen{root};
  std::deque<NodeId> queue{root};
  std::vector<std::pair<NodeId, NodeId>> edges;
  while (!queue.empty()) {
    NodeId v = queue.front();
    queue.pop_front();
    auto nbrs = g.neighbors(v);
    for (std::size_t i = nbrs.size(); i > 1; --i) std::swap(nbrs[i - 1], nbrs[rng.below(i)]);
    for (NodeId u : nbrs) {
      if (seen.insert(u).second) {
        edges.push_back({v, u});
        queue.push_back(u);
      }
    }
  }
  if (seen.size() != g.node_count())
    throw SchemeError("spanning tree instance needs a connected graph");
  Configuration cfg;
  cfg.graph = g;
  cfg.input = encode_tree_input(g, edges);
  return cfg;
}

Scheme make_spanning_tree_pls() {
  Scheme s;
  s.name = "spanning-tree";
  s.t = 1;

  s.prover = [](const Configuration& cfg) -> Labeling {
    if (!spanning_tree_predicate(cfg))
      throw SchemeError("spanning-tree prover: inputs do not designate a spanning tree");
    NodeId root = cfg.graph.nodes().front();  // smallest id
    Labeling labels;
    std::map<NodeId, std::pair<NodeId, std::uint64_t>> parent_dist;
    parent_dist[root] = {root, 0};
    std::deque<NodeId> queue{root};
    while (!queue.empty()) {
      NodeId v = queue.front();
      queue.pop_front();
      for (NodeId u : tree_neighbors(cfg.graph, cfg.input, v)) {
        if (parent_dist.count(u)) continue;
        parent_dist[u] = {v, parent_dist[v].second + 1};
        queue.push_back(u);
      }
    }
    for (NodeId v : cfg.graph.nodes()) {
      auto [p, d] = parent_dist.at(v);
      labels[v] = make_label(root, p, d);
    }
    return labels;
  };

  s.verifier = [](const LocalView& view) -> Verdict {
    const NodeId v = view.center;
    auto own = parse_label(view.label_of(v));
    if (!own) return Verdict::reject();
    auto nbrs = view.subgraph.neighbors(v);
    std::map<NodeId, TreeLabel> nlabel;
    for (NodeId u : nbrs) {
      auto lu = parse_label(view.label_of(u));
      if (!lu) return Verdict::reject();
      nlabel[u] = *lu;
    }
    for (NodeId u : nbrs)
      if (nlabel[u].root != own->root) return Verdict::reject();
    if (own->dist >= view.n_declared) return Verdict::reject();

    auto tn = tree_neighbors(view.subgraph, view.inputs, v);
    if (own->dist == 0) {
      if (own->root != v || own->parent != v) return Verdict::reject();
      for (NodeId u : tn)
        if (nlabel[u].dist != 1) return Verdict::reject();
      return Verdict::accept();
    }
    // non-root: tree edges step by exactly one level, with a unique parent
    NodeId parent_seen = 0;
    int parents = 0;
    for (NodeId u : tn) {
      std::uint64_t du = nlabel[u].dist;
      if (du + 1 != own->dist && du != own->dist + 1) return Verdict::reject();
      if (du + 1 == own->dist) {
        ++parents;
        parent_seen = u;
      }
    }
    if (parents != 1 || own->parent != parent_seen) return Verdict::reject();
    return Verdict::accept();
  };

  // Extension finder used by the tradeoff compiler: anchor distances on the
  // fixed labels (plus the root when it is free), then push depths along
  // designated edges by a multi-source unit-weight Dijkstra. The caller
  // validates the candidate, so returning nullopt or a wrong guess on
  // malformed instances is rejected, never accepted.
  s.extension_hook = [](const ExtensionRequest& req) -> std::optional<Labeling> {
    const LocalView& view = *req.view;
    std::set<NodeId> region(req.cluster.begin(), req.cluster.end());
    std::vector<NodeId> fixed_nodes;
    for (const auto& [u, l] : req.fixed) {
      region.insert(u);
      fixed_nodes.push_back(u);
    }

    std::optional<NodeId> root;
    std::map<NodeId, TreeLabel> anchor;
    for (NodeId u : fixed_nodes) {
      auto l = parse_label(req.fixed.at(u));
      if (!l) return std::nullopt;
      if (root && *root != l->root) return std::nullopt;
      root = l->root;
      anchor[u] = *l;
    }
    std::set<NodeId> free_set(req.free_nodes.begin(), req.free_nodes.end());
    if (!root) {
      // no boundary: the cluster spans its whole component; the honest
      // prover roots at the smallest id
      if (view.subgraph.node_count() == 0) return std::nullopt;
      root = view.subgraph.nodes().front();
    }

    // multi-source relaxation over designated edges inside the region
    std::map<NodeId, std::uint64_t> dist;
    std::map<NodeId, NodeId> parent;
    using Item = std::pair<std::uint64_t, NodeId>;
    std::priority_queue<Item, std::vector<Item>, std::greater<Item>> pq;
    for (auto& [u, l] : anchor) {
      dist[u] = l.dist;
      parent[u] = l.parent;
      pq.push({l.dist, u});
    }
    if (free_set.count(*root)) {
      dist[*root] = 0;
      parent[*root] = *root;
      pq.push({0, *root});
    }
    while (!pq.empty()) {
      auto [d, u] = pq.top();
      pq.pop();
      if (dist.at(u) != d) continue;
      if (!view.subgraph.has_node(u)) continue;
      for (NodeId w : tree_neighbors(view.subgraph, view.inputs, u)) {
        if (!region.count(w) || !free_set.count(w)) continue;
        auto it = dist.find(w);
        if (it == dist.end() || it->second > d + 1) {
          dist[w] = d + 1;
          parent[w] = u;
          pq.push({d + 1, w});
        }
      }
    }

    Labeling out = req.fixed;
    for (NodeId v : req.free_nodes) {
      auto it = dist.find(v);
      if (it == dist.end()) return std::nullopt;  // not reachable over tree edges
      out[v] = make_label(*root, parent.at(v), it->second);
    }
    return out;
  };

  return s;
}

}  // namespace pls
