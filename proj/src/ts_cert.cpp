#include "pls/schemes/ts_cert.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "pls/schemes/string_share.hpp"

namespace pls {

namespace {

/// Distinct sorted clusters, stable order of first appearance.
int push_unique(std::vector<Cluster>& clusters, Cluster c) {
  for (std::size_t i = 0; i < clusters.size(); ++i)
    if (clusters[i] == c) return int(i);
  clusters.push_back(std::move(c));
  return int(clusters.size()) - 1;
}

/// Nodes of the view within dist <= 2 of the given cluster.
std::vector<NodeId> view_b2(const DistOracle& oracle, const Cluster& c) {
  std::set<NodeId> out;
  for (NodeId u : c) {
    const auto& d = oracle.from(u);
    for (NodeId w : oracle.graph().nodes()) {
      int dw = d[oracle.graph().index_of(w)];
      if (dw != kInfDist && dw <= 2) out.insert(w);
    }
  }
  return {out.begin(), out.end()};
}

/// The distance-2 separation condition at one cluster: no non-separating
/// member may be within two hops of a non-separating node outside the
/// cluster. Over all nodes this is equivalent to two-separation.
bool locally_two_separated(const DistOracle& oracle, const Cluster& own,
                           const std::function<bool(NodeId)>& in_x) {
  std::set<NodeId> own_set(own.begin(), own.end());
  for (NodeId u : own) {
    if (in_x(u)) continue;
    const auto& d = oracle.from(u);
    for (NodeId w : oracle.graph().nodes()) {
      if (own_set.count(w) || in_x(w)) continue;
      int dw = d[oracle.graph().index_of(w)];
      if (dw != kInfDist && dw <= 2) return false;
    }
  }
  return true;
}

}  // namespace

TsOutput expected_ts_output(const Graph& g, const TsPartition& p, NodeId v) {
  TsOutput out;
  std::map<NodeId, int> cluster_of;
  for (std::size_t i = 0; i < p.clusters.size(); ++i)
    for (NodeId u : p.clusters[i]) cluster_of[u] = int(i);
  std::set<NodeId> x(p.separating_set.begin(), p.separating_set.end());

  const Cluster& own = p.clusters[cluster_of.at(v)];
  auto b2 = ball_of_set(g, own, 2);
  std::set<int> indices;
  for (NodeId u : b2) indices.insert(cluster_of.at(u));
  for (int i : indices) {
    out.clusters.push_back(p.clusters[i]);
    std::vector<NodeId> xc;
    for (NodeId u : p.clusters[i])
      if (x.count(u)) xc.push_back(u);
    out.x_sets.push_back(std::move(xc));
    if (i == cluster_of.at(v)) out.own = int(out.clusters.size()) - 1;
  }
  return out;
}

PartitionProvider warmup_provider(int t, Rational eps) {
  return [t, eps](const Graph& g) -> std::optional<TsPartition> {
    int start = 1;
    if (eps.num > 0) start = int((eps.den + eps.num - 1) / eps.num);  // ceil(1/eps)
    for (int tw = start; tw < start + 4; ++tw) {
      OrderedPartition p = warmup_carving(g, tw);
      TsPartition ts = degeneracy_to_ts(g, p);
      if (check_ts(g, ts, t, eps).ok) return ts;
    }
    return std::nullopt;
  };
}

Scheme make_ts_cert_logn(int t, Rational eps, PartitionProvider provider) {
  Scheme s;
  s.name = "ts-cert-logn";
  s.t = 3 * t + 2;

  s.prover_partition = [provider](const Configuration& cfg) -> TsPartition {
    auto p = provider(cfg.graph);
    if (!p) throw SchemeError("ts-cert-logn prover: no valid partition available");
    return *p;
  };

  s.prover = [prov = s.prover_partition](const Configuration& cfg) -> Labeling {
    TsPartition p = prov(cfg);
    std::set<NodeId> x(p.separating_set.begin(), p.separating_set.end());
    int width = 1;
    while ((std::size_t(1) << width) < p.clusters.size()) ++width;
    Labeling labels;
    for (std::size_t i = 0; i < p.clusters.size(); ++i) {
      for (NodeId v : p.clusters[i]) {
        Label l;
        l.push_back(x.count(v) != 0);
        l.append(BitString::from_uint(i, width));
        labels[v] = l;
      }
    }
    return labels;
  };

  s.verifier = [t, eps](const LocalView& view) -> Verdict {
    // label = [x bit][cluster id bits]; ids are compared as raw strings
    for (NodeId u : view.subgraph.nodes())
      if (view.label_of(u).empty()) return Verdict::reject();
    auto in_x = [&](NodeId u) { return view.label_of(u).bit(0); };
    auto comp_id = [&](NodeId u) {
      const Label& l = view.label_of(u);
      return l.slice(1, l.size() - 1);
    };

    DistOracle oracle(view.subgraph);
    const Label own_id = comp_id(view.center);
    Cluster own;
    for (NodeId u : view.subgraph.nodes())
      if (comp_id(u) == own_id) own.push_back(u);

    TsOutput out;
    int own_index = push_unique(out.clusters, own);
    for (NodeId w : view_b2(oracle, own)) {
      Cluster cw;
      const Label wid = comp_id(w);
      const auto& dw = oracle.from(w);
      for (NodeId u : view.subgraph.nodes()) {
        int du = dw[view.subgraph.index_of(u)];
        if (du != kInfDist && du <= 3 * t + 2 && comp_id(u) == wid) cw.push_back(u);
      }
      push_unique(out.clusters, std::move(cw));
    }
    out.own = own_index;
    for (const Cluster& c : out.clusters) {
      std::vector<NodeId> xc;
      for (NodeId u : c)
        if (in_x(u)) xc.push_back(u);
      out.x_sets.push_back(std::move(xc));
    }

    // weak diameter and cost ratio per visible cluster, exact comparison
    for (std::size_t i = 0; i < out.clusters.size(); ++i) {
      if (weak_diameter(oracle, out.clusters[i]) > t) return Verdict::reject();
      Rational ratio(std::int64_t(out.x_sets[i].size()),
                     std::int64_t(out.clusters[i].size()));
      if (eps < ratio) return Verdict::reject();
    }
    if (!locally_two_separated(oracle, own, in_x)) return Verdict::reject();
    return Verdict::accept(out);
  };

  return s;
}

Scheme make_ts_cert_logn(int t, Rational eps) {
  return make_ts_cert_logn(t, eps, warmup_provider(t, eps));
}

int ts_cert_const_radius(int t, std::size_t n) {
  return std::max(4 * kConstShareR + 2, 40 * t * log2_ceil(n) + 2);
}

namespace {

BitString encode_share_payload(std::size_t n, std::uint64_t seed) {
  BitString s;
  s.append_vlq(n);
  s.append_vlq(seed);
  return s;
}

std::optional<std::pair<std::size_t, std::uint64_t>> decode_share_payload(const BitString& s) {
  auto n = s.read_vlq(0);
  if (!n) return std::nullopt;
  auto seed = s.read_vlq(n->second);
  if (!seed || seed->second != s.size()) return std::nullopt;
  return std::make_pair(std::size_t(n->first), seed->first);
}

}  // namespace

Scheme make_ts_cert_const(int t, std::size_t n, int seed_tries) {
  Scheme s;
  s.name = "ts-cert-const";
  s.t = ts_cert_const_radius(t, n);

  auto run_prover_carving = [t, seed_tries](const Graph& g) {
    auto good = find_good_seed(g, t, seed_tries);
    if (!good) throw SchemeError("ts-cert-const prover: no good seed within budget");
    RadiusFunction radii(good->seed, t, g.node_count());
    CarvingResult r = randomized_carving(g, t, radii);
    return std::make_pair(good->seed, std::move(r));
  };

  s.prover_partition = [run_prover_carving](const Configuration& cfg) -> TsPartition {
    return run_prover_carving(cfg.graph).second.partition;
  };

  s.prover = [t, n, run_prover_carving](const Configuration& cfg) -> Labeling {
    const Graph& g = cfg.graph;
    if (g.node_count() != n)
      throw SchemeError("ts-cert-const prover: scheme built for a different n");
    if (g.node_count() <= std::size_t(kConstShareR))
      throw SchemeError("ts-cert-const prover needs n > " + std::to_string(kConstShareR));
    auto [seed, carving] = run_prover_carving(g);

    BitString payload = encode_share_payload(g.node_count(), seed);
    if (int(payload.size()) > kConstShareR)
      throw SchemeError("ts-cert-const prover: share payload too long");
    Scheme share = make_string_share(kConstShareR, payload);
    Labeling share_labels = share.prover(cfg);

    std::set<NodeId> taken(carving.taken.begin(), carving.taken.end());
    std::set<NodeId> x(carving.partition.separating_set.begin(),
                       carving.partition.separating_set.end());
    Labeling labels;
    for (NodeId v : g.nodes()) {
      Label l;
      l.push_back(taken.count(v) != 0);
      l.push_back(x.count(v) != 0);
      l.append(share_labels.at(v));
      labels[v] = l;
    }
    return labels;
  };

  s.verifier = [t](const LocalView& view) -> Verdict {
    // label = [InT][InX][share InU][share block...]
    for (NodeId u : view.subgraph.nodes())
      if (view.label_of(u).size() < 3) return Verdict::reject();
    auto in_t = [&](NodeId u) { return view.label_of(u).bit(0); };
    auto in_x = [&](NodeId u) { return view.label_of(u).bit(1); };
    auto share_fields = [&](NodeId u) -> std::optional<std::pair<bool, Label>> {
      const Label& l = view.label_of(u);
      return std::make_pair(l.bit(2), l.slice(3, l.size() - 3));
    };

    auto payload = share_verify(view, kConstShareR, share_fields);
    if (!payload) return Verdict::reject();
    auto decoded = decode_share_payload(*payload);
    if (!decoded) return Verdict::reject();
    auto [shared_n, shared_seed] = *decoded;
    if (shared_n < 2) return Verdict::reject();
    RadiusFunction radii(shared_seed, t, shared_n);
    const int reach = 16 * t * radii.log_n();

    DistOracle oracle(view.subgraph);
    // cluster centers by smallest covering taken id, for every view node
    std::map<NodeId, std::optional<NodeId>> fmc;
    for (NodeId u : view.subgraph.nodes()) fmc[u] = std::nullopt;
    for (NodeId w : view.subgraph.nodes()) {
      if (!in_t(w)) continue;
      const int rw = radii(w);
      const auto& dw = oracle.from(w);
      for (NodeId u : view.subgraph.nodes()) {
        int du = dw[view.subgraph.index_of(u)];
        if (du == kInfDist || du > rw) continue;
        auto& slot = fmc[u];
        if (!slot || w < *slot) slot = w;
      }
    }
    if (!fmc.at(view.center)) return Verdict::reject();

    auto cluster_at = [&](NodeId w) {
      Cluster c;
      const auto& dw = oracle.from(w);
      for (NodeId u : view.subgraph.nodes()) {
        int du = dw[view.subgraph.index_of(u)];
        if (du != kInfDist && du <= reach && fmc.at(u) && *fmc.at(u) == *fmc.at(w))
          c.push_back(u);
      }
      return c;
    };

    Cluster own = cluster_at(view.center);
    TsOutput out;
    int own_index = push_unique(out.clusters, own);
    for (NodeId w : view_b2(oracle, own)) {
      if (!fmc.at(w)) return Verdict::reject();
      push_unique(out.clusters, cluster_at(w));
    }
    out.own = own_index;
    for (const Cluster& c : out.clusters) {
      std::vector<NodeId> xc;
      for (NodeId u : c)
        if (in_x(u)) xc.push_back(u);
      out.x_sets.push_back(std::move(xc));
    }

    if (weak_diameter(oracle, own) > reach) return Verdict::reject();
    std::int64_t own_x = std::int64_t(out.x_sets[own_index].size());
    if (own_x * t > std::int64_t(own.size())) return Verdict::reject();  // ratio > 1/t
    if (!locally_two_separated(oracle, own, in_x)) return Verdict::reject();
    return Verdict::accept(out);
  };

  return s;
}

}  // namespace pls
