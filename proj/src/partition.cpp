#include "pls/partition.hpp"

#include <algorithm>
#include <cassert>
#include <deque>
#include <set>
#include <sstream>
#include <unordered_set>

#include "pls/rng.hpp"

namespace pls {

namespace {

bool sorted_contains(const std::vector<NodeId>& v, NodeId x) {
  return std::binary_search(v.begin(), v.end(), x);
}

/// Throws unless clusters are non-empty, disjoint, cover g's nodes, and the
/// separating set is a subset of the nodes.
void validate_partition_structure(const Graph& g, const std::vector<Cluster>& clusters,
                                  const std::vector<NodeId>* x) {
  std::unordered_set<NodeId> seen;
  std::size_t total = 0;
  for (const Cluster& c : clusters) {
    if (c.empty()) throw GraphError("partition contains an empty cluster");
    for (NodeId v : c) {
      if (!g.has_node(v)) throw GraphError("cluster node not in graph");
      if (!seen.insert(v).second) throw GraphError("clusters overlap");
    }
    total += c.size();
  }
  if (total != g.node_count()) throw GraphError("clusters do not cover the node set");
  if (x) {
    for (NodeId v : *x)
      if (!g.has_node(v)) throw GraphError("separating set node not in graph");
  }
}

}  // namespace

int log2_ceil(std::size_t n) {
  int bits = 0;
  std::size_t v = 1;
  while (v < n) {
    v <<= 1;
    ++bits;
  }
  return std::max(1, bits);
}

TsCheckReport check_ts(const Graph& g, const TsPartition& p, int t, const Rational& eps) {
  validate_partition_structure(g, p.clusters, &p.separating_set);
  TsCheckReport r;
  DistOracle oracle(g);

  std::unordered_set<NodeId> in_x(p.separating_set.begin(), p.separating_set.end());

  // (a) weak diameters
  r.max_weak_diameter = 0;
  for (std::size_t i = 0; i < p.clusters.size(); ++i) {
    int wd = weak_diameter(oracle, p.clusters[i]);
    r.max_weak_diameter = std::max(r.max_weak_diameter, wd);
    if (wd > t)
      r.violations.push_back("cluster " + std::to_string(i) + " weak diameter " +
                             (wd == kInfDist ? "inf" : std::to_string(wd)) + " > " +
                             std::to_string(t));
  }

  // (b) cost ratio, exact
  r.cost_ratio = Rational::zero();
  for (std::size_t i = 0; i < p.clusters.size(); ++i) {
    std::int64_t k = 0;
    for (NodeId v : p.clusters[i])
      if (in_x.count(v)) ++k;
    Rational ratio(k, std::int64_t(p.clusters[i].size()));
    if (r.cost_ratio < ratio) r.cost_ratio = ratio;
    if (eps < ratio)
      r.violations.push_back("cluster " + std::to_string(i) + " cost ratio " + ratio.str() +
                             " > " + eps.str());
  }

  // (c) two-separation. A path has two consecutive X vertices iff it crosses
  // an X-X edge, so delete those edges and require every remaining component
  // to touch non-X nodes of at most one cluster.
  std::vector<int> cluster_of(g.node_count(), -1);
  for (std::size_t i = 0; i < p.clusters.size(); ++i)
    for (NodeId v : p.clusters[i]) cluster_of[g.index_of(v)] = int(i);

  std::vector<int> comp(g.node_count(), -1);
  int ncomp = 0;
  for (std::size_t s = 0; s < g.node_count(); ++s) {
    if (comp[s] != -1) continue;
    std::deque<int> queue{int(s)};
    comp[s] = ncomp;
    while (!queue.empty()) {
      int u = queue.front();
      queue.pop_front();
      bool u_in_x = in_x.count(g.id_at(u)) != 0;
      for (int w : g.adj_at(u)) {
        if (comp[w] != -1) continue;
        if (u_in_x && in_x.count(g.id_at(w))) continue;  // X-X edge removed
        comp[w] = ncomp;
        queue.push_back(w);
      }
    }
    ++ncomp;
  }
  std::vector<int> comp_cluster(ncomp, -1);
  r.two_separated = true;
  for (std::size_t i = 0; i < g.node_count(); ++i) {
    NodeId v = g.id_at(int(i));
    if (in_x.count(v)) continue;
    int c = comp[i];
    if (comp_cluster[c] == -1) {
      comp_cluster[c] = cluster_of[i];
    } else if (comp_cluster[c] != cluster_of[i]) {
      r.two_separated = false;
      r.violations.push_back("two-separation fails: clusters " +
                             std::to_string(comp_cluster[c]) + " and " +
                             std::to_string(cluster_of[i]) +
                             " share non-X nodes in one component");
    }
  }

  r.ok = r.violations.empty();
  return r;
}

Rational cluster_degeneracy(const Graph& g, const OrderedPartition& p) {
  validate_partition_structure(g, p.clusters, nullptr);
  Rational worst = Rational::zero();
  std::vector<NodeId> future;  // union of clusters after index i
  for (std::size_t i = p.clusters.size(); i-- > 0;) {
    std::vector<NodeId> near = ball_of_set(g, future, 2);
    std::sort(near.begin(), near.end());
    std::int64_t count = 0;
    for (NodeId v : p.clusters[i])
      if (sorted_contains(near, v)) ++count;
    Rational ratio(count, std::int64_t(p.clusters[i].size()));
    if (worst < ratio) worst = ratio;
    future.insert(future.end(), p.clusters[i].begin(), p.clusters[i].end());
  }
  return worst;
}

TsPartition degeneracy_to_ts(const Graph& g, const OrderedPartition& p) {
  validate_partition_structure(g, p.clusters, nullptr);
  TsPartition out;
  out.clusters = p.clusters;
  std::set<NodeId> x;
  std::vector<NodeId> future;
  for (std::size_t i = p.clusters.size(); i-- > 0;) {
    std::vector<NodeId> near = ball_of_set(g, future, 2);
    std::sort(near.begin(), near.end());
    for (NodeId v : p.clusters[i])
      if (sorted_contains(near, v)) x.insert(v);
    future.insert(future.end(), p.clusters[i].begin(), p.clusters[i].end());
  }
  out.separating_set.assign(x.begin(), x.end());
  return out;
}

OrderedPartition warmup_carving(const Graph& g, int t) {
  if (t < 1) throw GraphError("warmup carving needs t >= 1");
  OrderedPartition out;
  std::set<NodeId> alive(g.nodes().begin(), g.nodes().end());
  while (!alive.empty()) {
    NodeId center = *alive.begin();
    auto d = bfs_distances(g, center);
    // alive-node counts bucketed by distance from the center
    int max_d = 0;
    for (NodeId v : alive) {
      int dv = d[g.index_of(v)];
      if (dv != kInfDist) max_d = std::max(max_d, dv);
    }
    std::vector<std::int64_t> count_at(max_d + 3, 0);
    for (NodeId v : alive) {
      int dv = d[g.index_of(v)];
      if (dv != kInfDist) ++count_at[dv];
    }
    std::vector<std::int64_t> cum(max_d + 3, 0);
    std::int64_t run = 0;
    for (int j = 0; j < int(cum.size()); ++j) {
      run += count_at[j];
      cum[j] = run;
    }
    auto alive_in_ball = [&](int radius) -> std::int64_t {
      if (radius < 0) return 0;
      return cum[std::min(radius, int(cum.size()) - 1)];
    };
    int radius = 2;
    while (true) {
      // non-expanding: |B_j ∩ L| <= (1 + 1/t) |B_{j-2} ∩ L|, exactly
      if (alive_in_ball(radius) * t <= alive_in_ball(radius - 2) * (t + 1)) break;
      radius += 2;
      assert(radius <= 2 * (max_d + 2));
    }
    Cluster c;
    for (auto it = alive.begin(); it != alive.end();) {
      int dv = d[g.index_of(*it)];
      if (dv != kInfDist && dv <= radius) {
        c.push_back(*it);
        it = alive.erase(it);
      } else {
        ++it;
      }
    }
    std::sort(c.begin(), c.end());
    out.clusters.push_back(std::move(c));
  }
  return out;
}

PaddedSample sample_padded(const Graph& g, int lambda, double beta, std::uint64_t seed) {
  if (lambda < 1) throw GraphError("padded sample needs lambda >= 1");
  if (g.node_count() == 0) throw GraphError("padded sample needs a non-empty graph");
  {
    auto d = bfs_distances(g, g.nodes().front());
    for (int dv : d)
      if (dv == kInfDist) throw GraphError("padded sample needs a connected graph");
  }
  PaddedSample out;
  out.lambda = lambda;

  Rng rng(derive_seed(seed, /*stream=*/0x70616464ULL));
  std::vector<NodeId> order = g.nodes();
  for (std::size_t i = order.size(); i > 1; --i)
    std::swap(order[i - 1], order[rng.below(i)]);

  std::unordered_set<NodeId> alive(g.nodes().begin(), g.nodes().end());
  const double rate = beta / double(lambda);
  const double cap = double(lambda) / 2.0;
  for (NodeId center : order) {
    if (!alive.count(center)) continue;
    int radius = int(trunc_exp_sample(rng, rate, cap));
    auto d = bfs_distances(g, center);
    Cluster c;
    for (auto it = alive.begin(); it != alive.end();) {
      int dv = d[g.index_of(*it)];
      if (dv != kInfDist && dv <= radius) {
        c.push_back(*it);
        it = alive.erase(it);
      } else {
        ++it;
      }
    }
    std::sort(c.begin(), c.end());
    out.partition.clusters.push_back(std::move(c));
  }
  return out;
}

namespace {

/// Padded sample restricted to an alive subset; distances in the full graph.
std::vector<Cluster> sample_padded_restricted(const Graph& g,
                                              const std::vector<NodeId>& alive_nodes,
                                              int lambda, double beta, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<NodeId> order = alive_nodes;
  for (std::size_t i = order.size(); i > 1; --i)
    std::swap(order[i - 1], order[rng.below(i)]);
  std::unordered_set<NodeId> alive(alive_nodes.begin(), alive_nodes.end());
  const double rate = beta / double(lambda);
  const double cap = double(lambda) / 2.0;
  std::vector<Cluster> clusters;
  for (NodeId center : order) {
    if (!alive.count(center)) continue;
    int radius = int(trunc_exp_sample(rng, rate, cap));
    auto d = bfs_distances(g, center);
    Cluster c;
    for (auto it = alive.begin(); it != alive.end();) {
      int dv = d[g.index_of(*it)];
      if (dv != kInfDist && dv <= radius) {
        c.push_back(*it);
        it = alive.erase(it);
      } else {
        ++it;
      }
    }
    std::sort(c.begin(), c.end());
    clusters.push_back(std::move(c));
  }
  return clusters;
}

}  // namespace

PaddedCarvingResult padded_carving(const Graph& g, int t, double beta, std::uint64_t seed,
                                   int max_resamples) {
  if (t < 1) throw GraphError("padded carving needs t >= 1");
  {
    auto d = bfs_distances(g, g.nodes().front());
    for (int dv : d)
      if (dv == kInfDist) throw GraphError("padded carving needs a connected graph");
  }
  PaddedCarvingResult result;
  const Rational threshold = Rational::from_double(2.0 * beta / double(t));

  std::vector<NodeId> alive = g.nodes();
  while (!alive.empty()) {
    ++result.steps;
    bool carved = false;
    Rational best_ratio(1, 1);
    bool have_best = false;
    for (int attempt = 0; attempt < max_resamples; ++attempt) {
      ++result.resamples_used;
      std::uint64_t sub = derive_seed(seed, std::uint64_t(result.steps), std::uint64_t(attempt));
      auto clusters = sample_padded_restricted(g, alive, t, beta, sub);

      // the per-sample candidate is the cluster minimizing the boundary ratio
      const Cluster* best = nullptr;
      Rational best_here(1, 1);
      for (const Cluster& c : clusters) {
        std::vector<NodeId> rest;
        std::unordered_set<NodeId> in_c(c.begin(), c.end());
        for (NodeId v : alive)
          if (!in_c.count(v)) rest.push_back(v);
        auto near = ball_of_set(g, rest, 2);
        std::sort(near.begin(), near.end());
        std::int64_t k = 0;
        for (NodeId v : c)
          if (sorted_contains(near, v)) ++k;
        Rational ratio(k, std::int64_t(c.size()));
        if (best == nullptr || ratio < best_here) {
          best = &c;
          best_here = ratio;
        }
      }
      if (!have_best || best_here < best_ratio) {
        best_ratio = best_here;
        have_best = true;
      }
      if (best != nullptr && best_here <= threshold) {
        Cluster c = *best;
        std::unordered_set<NodeId> in_c(c.begin(), c.end());
        std::vector<NodeId> next;
        for (NodeId v : alive)
          if (!in_c.count(v)) next.push_back(v);
        alive = std::move(next);
        result.partition.clusters.push_back(std::move(c));
        carved = true;
        break;
      }
    }
    if (!carved) {
      result.best_ratio = best_ratio;
      result.success = false;
      return result;
    }
  }
  result.success = true;
  return result;
}

RadiusFunction::RadiusFunction(std::uint64_t seed, int t, std::size_t n)
    : seed_(seed), t_(t), n_(n), log_n_(log2_ceil(n)) {
  if (t < 1) throw GraphError("radius function needs t >= 1");
  if (n < 2) throw GraphError("radius function needs n >= 2");
}

int RadiusFunction::operator()(NodeId id) const {
  // 3tL even values in [2tL+2, 8tL]
  const std::uint64_t choices = std::uint64_t(3) * t_ * log_n_;
  std::uint64_t h = derive_seed(seed_, 0x72616469ULL, id);
  return min_radius() + 2 * int(h % choices);
}

CarvingResult randomized_carving(const Graph& g, int t, const RadiusFunction& radii) {
  if (t < 1) throw GraphError("carving needs t >= 1");
  CarvingResult result;
  const std::size_t n = g.node_count();
  if (n <= 1) {
    // degenerate graphs are trivially partitioned
    result.success = true;
    if (n == 1) {
      result.partition.clusters.push_back({g.nodes().front()});
      result.taken.push_back(g.nodes().front());
    }
    return result;
  }

  const int L = log2_ceil(n);
  const int near_radius = 2 * t * L;
  std::set<NodeId> alive(g.nodes().begin(), g.nodes().end());
  std::set<NodeId> x_set;

  for (NodeId center : g.nodes()) {
    if (alive.empty()) break;
    auto d = bfs_distances(g, center);
    bool has_near_alive = false;
    for (NodeId v : alive) {
      int dv = d[g.index_of(v)];
      if (dv != kInfDist && dv <= near_radius) {
        has_near_alive = true;
        break;
      }
    }
    if (!has_near_alive) continue;

    const int radius = radii(center);
    std::int64_t inner = 0, outer = 0;
    Cluster candidate;
    for (NodeId v : alive) {
      int dv = d[g.index_of(v)];
      if (dv == kInfDist) continue;
      if (dv <= radius) {
        ++outer;
        candidate.push_back(v);
      }
      if (dv <= radius - 2) ++inner;
    }
    // non-expanding test, exact; an empty candidate is never taken
    if (candidate.empty() || outer * t > inner * (t + 1)) continue;

    std::sort(candidate.begin(), candidate.end());
    for (NodeId v : candidate) alive.erase(v);
    // X_i = C_i ∩ B_2(alive after removal)
    std::vector<NodeId> rest(alive.begin(), alive.end());
    auto near = ball_of_set(g, rest, 2);
    std::sort(near.begin(), near.end());
    for (NodeId v : candidate)
      if (sorted_contains(near, v)) x_set.insert(v);
    result.taken.push_back(center);
    result.partition.clusters.push_back(std::move(candidate));
  }

  if (!alive.empty()) {
    result.success = false;
    result.alive.assign(alive.begin(), alive.end());
    return result;
  }
  result.success = true;
  result.partition.separating_set.assign(x_set.begin(), x_set.end());
  return result;
}

std::optional<GoodSeed> find_good_seed(const Graph& g, int t, int max_tries,
                                       std::uint64_t start) {
  const std::size_t n = g.node_count();
  if (n <= 1) return GoodSeed{start, 1};
  const int L = log2_ceil(n);
  for (int k = 0; k < max_tries; ++k) {
    std::uint64_t seed = start + std::uint64_t(k);
    RadiusFunction radii(seed, t, n);
    CarvingResult r = randomized_carving(g, t, radii);
    if (!r.success) continue;
    auto report = check_ts(g, r.partition, 16 * t * L, Rational(1, t));
    if (report.ok) return GoodSeed{seed, k + 1};
  }
  return std::nullopt;
}

std::optional<NodeId> find_my_cluster(const DistOracle& oracle, NodeId v,
                                      const RadiusFunction& radii,
                                      const std::function<bool(NodeId)>& in_t) {
  const Graph& g = oracle.graph();
  const int reach = 8 * radii.t() * radii.log_n();
  std::optional<NodeId> best;
  for (NodeId u : g.nodes()) {
    if (!in_t(u)) continue;
    if (best && u >= *best) continue;  // ids scanned in increasing order
    int duv = oracle.dist(u, v);
    if (duv == kInfDist || duv > reach) continue;
    if (duv <= radii(u)) best = u;
  }
  return best;
}

void write_partition(std::ostream& os, const TsPartition& p) {
  for (std::size_t i = 0; i < p.clusters.size(); ++i) {
    os << "c " << i;
    for (NodeId v : p.clusters[i]) os << " " << v;
    os << "\n";
  }
  os << "x";
  for (NodeId v : p.separating_set) os << " " << v;
  os << "\n";
}

TsPartition read_partition(std::istream& is) {
  TsPartition p;
  std::string line;
  bool saw_x = false;
  while (std::getline(is, line)) {
    std::istringstream ls(line);
    std::string tag;
    if (!(ls >> tag) || tag[0] == '#') continue;
    if (tag == "c") {
      std::size_t idx;
      if (!(ls >> idx)) throw GraphError("partition file: bad cluster line");
      Cluster c;
      NodeId v;
      while (ls >> v) c.push_back(v);
      std::sort(c.begin(), c.end());
      if (idx != p.clusters.size()) throw GraphError("partition file: cluster index gap");
      p.clusters.push_back(std::move(c));
    } else if (tag == "x") {
      if (saw_x) throw GraphError("partition file: duplicate x line");
      saw_x = true;
      NodeId v;
      while (ls >> v) p.separating_set.push_back(v);
      std::sort(p.separating_set.begin(), p.separating_set.end());
    } else {
      throw GraphError("partition file: unknown tag '" + tag + "'");
    }
  }
  if (!saw_x) throw GraphError("partition file: missing x line");
  return p;
}

}  // namespace pls
