#include "pls/scheme.hpp"

#include <algorithm>

namespace pls {

const Label& LocalView::label_of(NodeId v) const {
  auto it = labels.find(v);
  if (it == labels.end()) throw SchemeError("view has no label for node " + std::to_string(v));
  return it->second;
}

const BitString& LocalView::input_of(NodeId v) const {
  auto it = inputs.find(v);
  if (it == inputs.end()) throw SchemeError("view has no input for node " + std::to_string(v));
  return it->second;
}

LocalView extract_view(const Graph& g, const std::unordered_map<NodeId, BitString>& inputs,
                       const Labeling& labeling, NodeId v, int t, std::size_t n_declared) {
  LocalView view;
  view.center = v;
  view.radius = t;
  view.n_declared = n_declared == 0 ? g.node_count() : n_declared;
  std::vector<NodeId> members = ball(g, v, t);
  for (NodeId u : members) view.subgraph.add_node(u);
  for (NodeId u : members)
    for (NodeId w : g.neighbors(u))
      if (u < w && view.subgraph.has_node(w)) view.subgraph.add_edge(u, w);
  for (NodeId u : members) {
    auto li = labeling.find(u);
    if (li == labeling.end()) throw SchemeError("labeling missing node " + std::to_string(u));
    view.labels[u] = li->second;
    auto ii = inputs.find(u);
    view.inputs[u] = ii == inputs.end() ? BitString() : ii->second;
  }
  return view;
}

LocalView extract_view(const Configuration& cfg, const Labeling& labeling, NodeId v, int t) {
  return extract_view(cfg.graph, cfg.input, labeling, v, t, cfg.graph.node_count());
}

std::unordered_map<NodeId, Verdict> run_scheme(const Scheme& s, const Configuration& cfg,
                                               const Labeling& labeling) {
  std::unordered_map<NodeId, Verdict> verdicts;
  for (NodeId v : cfg.graph.nodes())
    verdicts[v] = s.verifier(extract_view(cfg, labeling, v, s.t));
  return verdicts;
}

bool all_accept(const std::unordered_map<NodeId, Verdict>& verdicts) {
  return std::all_of(verdicts.begin(), verdicts.end(),
                     [](const auto& kv) { return kv.second.accepted; });
}

CompletenessReport check_completeness(const Scheme& s, const Predicate& pred,
                                      const std::vector<Configuration>& cfgs) {
  CompletenessReport report;
  for (std::size_t i = 0; i < cfgs.size(); ++i) {
    if (!pred(cfgs[i]))
      throw SchemeError("completeness check got a no-instance at index " + std::to_string(i));
    Labeling labels = s.prover(cfgs[i]);
    auto verdicts = run_scheme(s, cfgs[i], labels);
    for (const auto& [v, verdict] : verdicts)
      if (!verdict.accepted) report.failures.push_back({i, v});
    ++report.configs_checked;
  }
  report.ok = report.failures.empty();
  return report;
}

std::size_t scheme_cost(const Scheme& s, const std::vector<Configuration>& cfgs) {
  std::size_t cost = 0;
  for (const Configuration& cfg : cfgs) {
    Labeling labels = s.prover(cfg);
    for (const auto& [v, label] : labels) cost = std::max(cost, label.size());
  }
  return cost;
}

}  // namespace pls
