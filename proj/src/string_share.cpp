#include "pls/schemes/string_share.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "pls/lex.hpp"

namespace pls {

ShareDecomposition share_decomposition(const Graph& g, int r) {
  if (r < 1) throw SchemeError("share decomposition needs r >= 1");
  ShareDecomposition out;
  std::set<NodeId> active(g.nodes().begin(), g.nodes().end());
  while (true) {
    std::vector<NodeId> active_vec(active.begin(), active.end());
    auto comps = induced_components(g, active_vec);
    const Cluster* big = nullptr;
    for (const Cluster& c : comps) {
      if (int(c.size()) >= r) {
        big = &c;
        break;  // components come ordered by smallest member
      }
    }
    if (!big) break;
    // first r nodes in BFS discovery order from the smallest id
    std::set<NodeId> in_comp(big->begin(), big->end());
    Cluster cluster;
    std::set<NodeId> picked;
    std::deque<NodeId> queue{big->front()};
    picked.insert(big->front());
    while (!queue.empty() && int(cluster.size()) < r) {
      NodeId v = queue.front();
      queue.pop_front();
      cluster.push_back(v);
      for (NodeId u : g.neighbors(v)) {
        if (in_comp.count(u) && !picked.count(u)) {
          picked.insert(u);
          queue.push_back(u);
        }
      }
    }
    std::sort(cluster.begin(), cluster.end());
    // carve the cluster and its active neighbors
    for (NodeId v : cluster) active.erase(v);
    std::vector<NodeId> fringe;
    for (NodeId v : cluster)
      for (NodeId u : g.neighbors(v))
        if (active.count(u)) fringe.push_back(u);
    for (NodeId u : fringe) active.erase(u);
    out.clusters.push_back(std::move(cluster));
  }
  std::set<NodeId> members;
  for (const Cluster& c : out.clusters) members.insert(c.begin(), c.end());
  for (NodeId v : g.nodes())
    if (!members.count(v)) out.u_set.push_back(v);
  return out;
}

std::optional<BitString> share_verify(const LocalView& view, int r, const ShareFields& fields) {
  const int horizon = 4 * r + 1;
  DistOracle oracle(view.subgraph);
  const auto& d = oracle.from(view.center);

  // nodes within the horizon must parse
  for (NodeId u : view.subgraph.nodes()) {
    int du = d[view.subgraph.index_of(u)];
    if (du != kInfDist && du <= horizon && !fields(u)) return std::nullopt;
  }

  // connected components of InU=0 nodes; unparseable boundary nodes count
  // as InU=1 (they reject on their own behalf)
  std::vector<NodeId> zeros;
  for (NodeId u : view.subgraph.nodes()) {
    auto f = fields(u);
    if (f && !f->first) zeros.push_back(u);
  }
  auto comps = induced_components(view.subgraph, zeros);

  struct CompInfo {
    const Cluster* cluster;
    int dmin;
    int dmax;
  };
  std::vector<CompInfo> infos;
  for (const Cluster& c : comps) {
    int dmin = kInfDist, dmax = 0;
    for (NodeId u : c) {
      int du = d[view.subgraph.index_of(u)];
      dmin = std::min(dmin, du);
      dmax = du == kInfDist ? kInfDist : std::max(dmax, du);
    }
    infos.push_back({&c, dmin, dmax});
  }

  bool near_ok = false;
  for (const CompInfo& info : infos) {
    if (info.dmin <= r) {
      // every cluster this close must be fully visible and of size exactly r
      if (info.dmax > horizon || int(info.cluster->size()) != r) return std::nullopt;
      near_ok = true;
    }
  }
  if (!near_ok) return std::nullopt;

  std::optional<BitString> shared;
  for (const CompInfo& info : infos) {
    if (info.dmax > horizon) continue;  // partially visible, not ours to check
    auto decoded = lex_decode(*info.cluster, [&](NodeId u) -> std::optional<Label> {
      auto f = fields(u);
      if (!f) return std::nullopt;
      return f->second;
    });
    if (!decoded) return std::nullopt;
    if (!shared) {
      shared = decoded;
    } else if (*shared != *decoded) {
      return std::nullopt;
    }
  }
  return shared;
}

Scheme make_string_share(int r, const BitString& s) {
  if (r < 1) throw SchemeError("string share needs r >= 1");
  if (int(s.size()) > r) throw SchemeError("string share needs |s| <= r");
  Scheme scheme;
  scheme.name = "string-share";
  scheme.t = 4 * r + 2;

  scheme.prover = [r, s](const Configuration& cfg) -> Labeling {
    const Graph& g = cfg.graph;
    if (g.node_count() <= std::size_t(r))
      throw SchemeError("string share prover needs |V| > r");
    auto d0 = bfs_distances(g, g.nodes().front());
    for (int dv : d0)
      if (dv == kInfDist) throw SchemeError("string share prover needs a connected graph");

    auto decomp = share_decomposition(g, r);
    Labeling labels;
    for (NodeId v : decomp.u_set) {
      Label l;
      l.push_back(true);  // InU
      labels[v] = l;
    }
    for (const Cluster& c : decomp.clusters) {
      for (NodeId v : c) {
        Label l;
        l.push_back(false);
        l.append(lex_encode(c, s, v));
        labels[v] = l;
      }
    }
    return labels;
  };

  scheme.verifier = [r](const LocalView& view) -> Verdict {
    auto fields = [&view](NodeId u) -> std::optional<std::pair<bool, Label>> {
      const Label& l = view.label_of(u);
      if (l.empty()) return std::nullopt;
      return std::make_pair(l.bit(0), l.slice(1, l.size() - 1));
    };
    auto shared = share_verify(view, r, fields);
    if (!shared) return Verdict::reject();
    return Verdict::accept(*shared);
  };

  return scheme;
}

}  // namespace pls
