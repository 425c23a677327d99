#include "pls/schemes/tradeoff.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "pls/lex.hpp"

namespace pls {

namespace {

/// leader(C) = max id in C \ X; nullopt when C is contained in X.
std::optional<NodeId> leader_of(const Cluster& c, const std::set<NodeId>& x) {
  std::optional<NodeId> best;
  for (NodeId v : c)
    if (!x.count(v) && (!best || v > *best)) best = v;
  return best;
}

struct ParsedLabels {
  Labeling ts;     // TSLabel per view node
  Labeling proof;  // ProofPart per view node
};

std::optional<ParsedLabels> parse_view_labels(const LocalView& view) {
  ParsedLabels out;
  for (NodeId u : view.subgraph.nodes()) {
    auto parts = BitString::decode_tuple(view.label_of(u));
    if (!parts || parts->size() != 2) return std::nullopt;
    out.ts[u] = (*parts)[0];
    out.proof[u] = (*parts)[1];
  }
  return out;
}

}  // namespace

Scheme compile_tradeoff(const Scheme& one_pls, const Scheme& ts_scheme,
                        const ExtensionSolver& solver) {
  if (one_pls.t != 1) throw SchemeError("compile_tradeoff expects a radius-1 base scheme");
  if (!ts_scheme.prover_partition)
    throw SchemeError("compile_tradeoff needs a TS-certifying scheme");
  if (solver.strategy == ExtensionSolver::Strategy::scheme_hook && !one_pls.extension_hook)
    throw SchemeError("scheme_hook solver needs a base scheme with an extension hook");

  Scheme s;
  s.name = "compiled:" + one_pls.name + ":" + ts_scheme.name;
  s.t = ts_scheme.t;
  s.prover_partition = ts_scheme.prover_partition;

  s.prover = [one_pls, ts_scheme](const Configuration& cfg) -> Labeling {
    Labeling ts_labels = ts_scheme.prover(cfg);
    TsPartition partition = ts_scheme.prover_partition(cfg);
    Labeling base_labels = one_pls.prover(cfg);
    std::set<NodeId> x(partition.separating_set.begin(), partition.separating_set.end());

    Labeling out;
    for (const Cluster& c : partition.clusters) {
      std::vector<BitString> x_labels;
      for (NodeId u : c)
        if (x.count(u)) x_labels.push_back(base_labels.at(u));  // id order via c
      BitString xlabel = BitString::encode_tuple(x_labels);
      for (NodeId v : c)
        out[v] = BitString::encode_tuple({ts_labels.at(v), lex_encode(c, xlabel, v)});
    }
    return out;
  };

  s.verifier = [one_pls, ts_scheme, solver](const LocalView& view) -> Verdict {
    auto parsed = parse_view_labels(view);
    if (!parsed) return Verdict::reject();

    LocalView ts_view = view;
    ts_view.labels = parsed->ts;
    Verdict ts_verdict = ts_scheme.verifier(ts_view);
    if (!ts_verdict.accepted) return Verdict::reject();
    const TsOutput out = std::any_cast<TsOutput>(ts_verdict.aux);

    // separating-set membership over the clusters this node can see
    std::set<NodeId> covered, x;
    for (std::size_t i = 0; i < out.clusters.size(); ++i) {
      covered.insert(out.clusters[i].begin(), out.clusters[i].end());
      x.insert(out.x_sets[i].begin(), out.x_sets[i].end());
    }

    // decoded boundary labels per visible cluster, resolved on demand
    std::map<NodeId, Label> ell_x;
    auto decode_cluster = [&](std::size_t i) -> bool {
      const Cluster& c = out.clusters[i];
      auto xl = lex_decode(c, [&](NodeId u) -> std::optional<Label> {
        auto it = parsed->proof.find(u);
        if (it == parsed->proof.end()) return std::nullopt;
        return it->second;
      });
      if (!xl) return false;
      auto parts = BitString::decode_tuple(*xl);
      if (!parts) return false;
      std::vector<NodeId> members_in_x;
      for (NodeId u : c)
        if (x.count(u)) members_in_x.push_back(u);
      if (parts->size() != members_in_x.size()) return false;
      for (std::size_t j = 0; j < members_in_x.size(); ++j) ell_x[members_in_x[j]] = (*parts)[j];
      return true;
    };

    const NodeId v = view.center;
    const Cluster& own = out.own_cluster();
    std::set<NodeId> own_set(own.begin(), own.end());
    auto own_leader = leader_of(own, x);

    // leader asserts its cluster's encoding carries |C ∩ X| strings
    if (own_leader && *own_leader == v) {
      if (!decode_cluster(std::size_t(out.own))) return Verdict::reject();
    }

    DistOracle oracle(view.subgraph);

    auto resolve_x_label = [&](NodeId u) -> bool {
      if (ell_x.count(u)) return true;
      for (std::size_t i = 0; i < out.clusters.size(); ++i) {
        if (std::binary_search(out.clusters[i].begin(), out.clusters[i].end(), u)) {
          return decode_cluster(i) && ell_x.count(u);
        }
      }
      return false;
    };

    // nodes fully surrounded by the separating set run the base verifier
    {
      std::vector<NodeId> b1 = view.subgraph.neighbors(v);
      b1.push_back(v);
      bool surrounded = std::all_of(b1.begin(), b1.end(),
                                    [&](NodeId u) { return x.count(u) != 0; });
      if (surrounded) {
        Labeling local;
        for (NodeId u : b1) {
          if (!resolve_x_label(u)) return Verdict::reject();
          local[u] = ell_x.at(u);
        }
        LocalView sub = extract_view(view.subgraph, view.inputs, local, v, 1, view.n_declared);
        if (!one_pls.verifier(sub).accepted) return Verdict::reject();
      }
    }

    // leader asserts a good extension of the boundary labels exists
    if (own_leader && *own_leader == v) {
      std::vector<NodeId> free_nodes;
      for (NodeId u : own)
        if (!x.count(u)) free_nodes.push_back(u);

      // H_C and the labels its verification touches
      std::set<NodeId> must_accept;
      std::set<NodeId> touched;
      for (NodeId u : free_nodes) {
        must_accept.insert(u);
        for (NodeId w : view.subgraph.neighbors(u)) must_accept.insert(w);
      }
      for (NodeId u : must_accept) {
        touched.insert(u);
        for (NodeId w : view.subgraph.neighbors(u)) touched.insert(w);
      }
      Labeling fixed;
      for (NodeId u : touched) {
        if (own_set.count(u) && !x.count(u)) continue;  // free
        if (!x.count(u)) return Verdict::reject();      // outside C ∪ X
        if (!resolve_x_label(u)) return Verdict::reject();
        fixed[u] = ell_x.at(u);
      }

      std::optional<Labeling> extension;
      if (solver.strategy == ExtensionSolver::Strategy::scheme_hook) {
        ExtensionRequest req;
        req.view = &view;
        req.cluster = own;
        req.free_nodes = free_nodes;
        req.fixed = fixed;
        req.must_accept.assign(must_accept.begin(), must_accept.end());
        extension = one_pls.extension_hook(req);
      } else {
        Configuration sub_cfg;
        sub_cfg.graph = view.subgraph;
        sub_cfg.input = view.inputs;
        LabelSearchProblem problem;
        problem.cfg = &sub_cfg;
        problem.scheme = &one_pls;
        problem.free_nodes = free_nodes;
        problem.max_bits.assign(free_nodes.size(), solver.max_bits);
        problem.fixed = fixed;
        problem.must_accept.assign(must_accept.begin(), must_accept.end());
        problem.budget = solver.budget;
        LabelSearchResult r = find_all_accept(problem);
        if (r.status == SearchStatus::budget_exceeded)
          throw BudgetError("extension solver budget exceeded");
        if (r.status == SearchStatus::found) extension = r.labeling;
      }
      if (!extension) return Verdict::reject();

      // re-validate the candidate whatever produced it
      Labeling candidate = fixed;
      for (NodeId u : free_nodes) candidate[u] = extension->at(u);
      for (NodeId u : must_accept) {
        LocalView sub = extract_view(view.subgraph, view.inputs, candidate, u, 1,
                                     view.n_declared);
        if (!one_pls.verifier(sub).accepted) return Verdict::reject();
      }
    }

    return Verdict::accept(ts_verdict.aux);
  };

  return s;
}

}  // namespace pls
