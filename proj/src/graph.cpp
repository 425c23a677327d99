#include "pls/graph.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

#include "pls/rng.hpp"

namespace pls {

void Graph::add_node(NodeId v) {
  if (index_.count(v)) throw GraphError("duplicate node id " + std::to_string(v));
  auto pos = std::lower_bound(ids_.begin(), ids_.end(), v) - ids_.begin();
  ids_.insert(ids_.begin() + pos, v);
  adj_.emplace(adj_.begin() + pos);
  // reindex tail
  index_.clear();
  for (std::size_t i = 0; i < ids_.size(); ++i) index_[ids_[i]] = int(i);
  for (auto& lst : adj_)
    for (int& x : lst)
      if (x >= pos) ++x;
}

void Graph::add_edge(NodeId u, NodeId v) {
  if (u == v) throw GraphError("self-loop at node " + std::to_string(u));
  int iu = index_of(u);
  int iv = index_of(v);
  auto& au = adj_[iu];
  auto posu = std::lower_bound(au.begin(), au.end(), iv);
  if (posu != au.end() && *posu == iv)
    throw GraphError("duplicate edge " + std::to_string(u) + "-" + std::to_string(v));
  au.insert(posu, iv);
  auto& av = adj_[iv];
  av.insert(std::lower_bound(av.begin(), av.end(), iu), iu);
  ++edge_count_;
}

bool Graph::has_edge(NodeId u, NodeId v) const {
  if (!has_node(u) || !has_node(v)) return false;
  const auto& au = adj_[index_.at(u)];
  return std::binary_search(au.begin(), au.end(), index_.at(v));
}

std::vector<NodeId> Graph::neighbors(NodeId v) const {
  const auto& av = adj_[index_of(v)];
  std::vector<NodeId> out;
  out.reserve(av.size());
  for (int i : av) out.push_back(ids_[i]);
  return out;  // adj_ is sorted by index, ids_ sorted by id: already ordered
}

std::size_t Graph::degree(NodeId v) const { return adj_[index_of(v)].size(); }

int Graph::index_of(NodeId v) const {
  auto it = index_.find(v);
  if (it == index_.end())
    throw GraphError("unknown node id " + std::to_string(v));
  return it->second;
}

bool operator==(const Graph& a, const Graph& b) {
  return a.ids_ == b.ids_ && a.adj_ == b.adj_;
}

std::vector<int> bfs_distances(const Graph& g, NodeId src) {
  std::vector<int> dist(g.node_count(), kInfDist);
  std::deque<int> queue;
  int s = g.index_of(src);
  dist[s] = 0;
  queue.push_back(s);
  while (!queue.empty()) {
    int u = queue.front();
    queue.pop_front();
    for (int w : g.adj_at(u)) {
      if (dist[w] == kInfDist) {
        dist[w] = dist[u] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

const std::vector<int>& DistOracle::from(NodeId src) const {
  int s = g_->index_of(src);
  auto it = cache_.find(s);
  if (it == cache_.end()) it = cache_.emplace(s, bfs_distances(*g_, src)).first;
  return it->second;
}

int DistOracle::dist(NodeId u, NodeId v) const {
  return from(u)[g_->index_of(v)];
}

int dist(const Graph& g, NodeId u, NodeId v) {
  g.index_of(v);  // validate before running the BFS
  return bfs_distances(g, u)[g.index_of(v)];
}

std::vector<NodeId> ball(const Graph& g, NodeId v, int t) {
  if (t < 0) throw GraphError("negative ball radius");
  auto d = bfs_distances(g, v);
  std::vector<NodeId> out;
  for (std::size_t i = 0; i < d.size(); ++i)
    if (d[i] <= t) out.push_back(g.id_at(int(i)));
  return out;
}

std::vector<NodeId> ball(const DistOracle& oracle, NodeId v, int t) {
  if (t < 0) throw GraphError("negative ball radius");
  const auto& d = oracle.from(v);
  std::vector<NodeId> out;
  for (std::size_t i = 0; i < d.size(); ++i)
    if (d[i] <= t) out.push_back(oracle.graph().id_at(int(i)));
  return out;
}

std::vector<NodeId> ball_of_set(const Graph& g, const std::vector<NodeId>& s, int t) {
  if (t < 0) throw GraphError("negative ball radius");
  // multi-source BFS
  std::vector<int> dist(g.node_count(), kInfDist);
  std::deque<int> queue;
  for (NodeId v : s) {
    int i = g.index_of(v);
    if (dist[i] == 0) continue;
    dist[i] = 0;
    queue.push_back(i);
  }
  while (!queue.empty()) {
    int u = queue.front();
    queue.pop_front();
    if (dist[u] == t) continue;
    for (int w : g.adj_at(u)) {
      if (dist[w] == kInfDist) {
        dist[w] = dist[u] + 1;
        queue.push_back(w);
      }
    }
  }
  std::vector<NodeId> out;
  for (std::size_t i = 0; i < dist.size(); ++i)
    if (dist[i] <= t) out.push_back(g.id_at(int(i)));
  return out;
}

int weak_diameter(const Graph& g, const Cluster& c) {
  DistOracle oracle(g);
  return weak_diameter(oracle, c);
}

int weak_diameter(const DistOracle& oracle, const Cluster& c) {
  if (c.empty()) throw GraphError("weak_diameter of empty cluster");
  int best = 0;
  for (std::size_t i = 0; i < c.size(); ++i) {
    const auto& d = oracle.from(c[i]);
    for (std::size_t j = i + 1; j < c.size(); ++j) {
      int dij = d[oracle.graph().index_of(c[j])];
      if (dij == kInfDist) return kInfDist;
      if (dij > best) best = dij;
    }
  }
  return best;
}

std::vector<Cluster> induced_components(const Graph& g, const std::vector<NodeId>& s) {
  std::unordered_map<NodeId, bool> in_s;
  for (NodeId v : s) in_s[v] = true;
  std::unordered_map<NodeId, bool> seen;
  std::vector<Cluster> comps;
  for (NodeId v : g.nodes()) {
    if (!in_s.count(v) || seen[v]) continue;
    Cluster comp;
    std::deque<NodeId> queue{v};
    seen[v] = true;
    while (!queue.empty()) {
      NodeId u = queue.front();
      queue.pop_front();
      comp.push_back(u);
      for (NodeId w : g.neighbors(u)) {
        if (in_s.count(w) && !seen[w]) {
          seen[w] = true;
          queue.push_back(w);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  return comps;
}

Configuration Configuration::plain(Graph g) {
  Configuration cfg;
  cfg.graph = std::move(g);
  for (NodeId v : cfg.graph.nodes()) cfg.input[v] = BitString();
  return cfg;
}

const BitString& Configuration::input_of(NodeId v) const {
  auto it = input.find(v);
  if (it == input.end())
    throw GraphError("no input for node " + std::to_string(v));
  return it->second;
}

Graph make_path(std::size_t n) {
  if (n == 0) throw GraphError("path needs n >= 1");
  Graph g;
  for (std::size_t i = 0; i < n; ++i) g.add_node(i);
  for (std::size_t i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

Graph make_cycle(std::size_t n) {
  if (n < 3) throw GraphError("cycle needs n >= 3");
  Graph g = make_path(n);
  g.add_edge(n - 1, 0);
  return g;
}

Graph make_grid(std::size_t rows, std::size_t cols) {
  if (rows == 0 || cols == 0) throw GraphError("grid needs positive dimensions");
  Graph g;
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) g.add_node(r * cols + c);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      if (c + 1 < cols) g.add_edge(r * cols + c, r * cols + c + 1);
      if (r + 1 < rows) g.add_edge(r * cols + c, (r + 1) * cols + c);
    }
  }
  return g;
}

Graph make_random_tree(std::size_t n, std::uint64_t seed) {
  if (n == 0) throw GraphError("tree needs n >= 1");
  Graph g;
  Rng rng(derive_seed(seed, /*stream=*/0x74726565ULL));
  for (std::size_t i = 0; i < n; ++i) g.add_node(i);
  for (std::size_t i = 1; i < n; ++i) g.add_edge(i, rng.below(i));
  return g;
}

Graph make_random_connected(std::size_t n, std::size_t extra_edges, std::uint64_t seed) {
  Graph g = make_random_tree(n, derive_seed(seed, 1));
  Rng rng(derive_seed(seed, 2));
  std::size_t added = 0;
  std::size_t attempts = 0;
  const std::size_t max_possible = n * (n - 1) / 2 - (n - 1);
  while (added < std::min(extra_edges, max_possible) && attempts < 50 * extra_edges + 100) {
    ++attempts;
    NodeId u = rng.below(n);
    NodeId v = rng.below(n);
    if (u == v || g.has_edge(u, v)) continue;
    g.add_edge(u, v);
    ++added;
  }
  return g;
}

Graph make_layered(int t, int m) {
  if (t < 1) throw GraphError("layered graph needs t >= 1");
  if (m < 3 || m % 2 == 0) throw GraphError("layered graph needs odd m >= 3");
  Graph g;
  std::vector<std::vector<NodeId>> layers;
  NodeId next = 0;
  for (int layer = 1; layer <= 2 * t + 3; ++layer) {
    std::size_t width = (layer % 2 == 1) ? 1 : std::size_t(m);
    std::vector<NodeId> ids;
    for (std::size_t i = 0; i < width; ++i) {
      g.add_node(next);
      ids.push_back(next++);
    }
    layers.push_back(std::move(ids));
  }
  for (std::size_t i = 0; i + 1 < layers.size(); ++i)
    for (NodeId u : layers[i])
      for (NodeId w : layers[i + 1]) g.add_edge(u, w);
  return g;
}

int layered_layer_of(NodeId v, int t, int m) {
  NodeId pos = 0;
  for (int layer = 1; layer <= 2 * t + 3; ++layer) {
    NodeId width = (layer % 2 == 1) ? 1 : NodeId(m);
    if (v < pos + width) return layer;
    pos += width;
  }
  throw GraphError("node id outside layered graph");
}

std::vector<NodeId> layered_layer(int layer, int /*t*/, int m) {
  NodeId pos = 0;
  for (int l = 1; l < layer; ++l) pos += (l % 2 == 1) ? 1 : NodeId(m);
  NodeId width = (layer % 2 == 1) ? 1 : NodeId(m);
  std::vector<NodeId> out;
  for (NodeId i = 0; i < width; ++i) out.push_back(pos + i);
  return out;
}

Graph generate(const std::string& kind, const GenParams& params, std::uint64_t seed) {
  const auto& p = params.values;
  auto need = [&](std::size_t k) {
    if (p.size() != k)
      throw GraphError("kind '" + kind + "' expects " + std::to_string(k) + " parameter(s)");
  };
  if (kind == "path") {
    need(1);
    return make_path(p[0]);
  }
  if (kind == "cycle") {
    need(1);
    return make_cycle(p[0]);
  }
  if (kind == "grid") {
    need(2);
    return make_grid(p[0], p[1]);
  }
  if (kind == "random_tree") {
    need(1);
    return make_random_tree(p[0], seed);
  }
  if (kind == "random_connected") {
    if (p.size() == 1) return make_random_connected(p[0], p[0] / 2, seed);
    need(2);
    return make_random_connected(p[0], p[1], seed);
  }
  if (kind == "layered") {
    need(2);
    return make_layered(int(p[0]), int(p[1]));
  }
  throw GraphError("unknown graph kind '" + kind + "'");
}

}  // namespace pls
