#include "pls/search.hpp"

#include <algorithm>
#include <cassert>
#include <unordered_map>
#include <unordered_set>

#include "pls/rng.hpp"

namespace pls {

namespace {

/// Candidate labels of length 0..max_bits, shortest first.
std::vector<Label> candidate_labels(int max_bits) {
  std::vector<Label> out;
  for (int len = 0; len <= max_bits; ++len) {
    auto of_len = BitString::all_of_length(len);
    out.insert(out.end(), of_len.begin(), of_len.end());
  }
  return out;
}

struct Watcher {
  LocalView view;                 // labels refreshed before each evaluation
  std::vector<NodeId> members;    // ball nodes
  std::vector<NodeId> free_members;
};

}  // namespace

EnumerationResult enumerate_all_accept(
    const LabelSearchProblem& problem,
    const std::function<bool(const Labeling&)>& on_found) {
  const Configuration& cfg = *problem.cfg;
  const Scheme& scheme = *problem.scheme;
  EnumerationResult result;

  assert(problem.free_nodes.size() == problem.max_bits.size());

  std::unordered_map<NodeId, std::size_t> free_index;
  for (std::size_t i = 0; i < problem.free_nodes.size(); ++i)
    free_index[problem.free_nodes[i]] = i;

  // Working labeling: fixed labels plus the current partial assignment.
  Labeling current = problem.fixed;
  for (NodeId v : problem.free_nodes) current[v] = Label();

  std::vector<Watcher> watchers(problem.must_accept.size());
  for (std::size_t w = 0; w < problem.must_accept.size(); ++w) {
    watchers[w].view = extract_view(cfg, current, problem.must_accept[w], scheme.t);
    watchers[w].members = watchers[w].view.subgraph.nodes();
    for (NodeId u : watchers[w].members)
      if (free_index.count(u)) watchers[w].free_members.push_back(u);
  }

  // Assignment order: repeatedly commit the unassigned members of the
  // watcher with the fewest of them, so verdict checks fire early and prune
  // hard. checks_after[d] lists watchers decidable once depth d is assigned.
  std::vector<NodeId> order;
  std::unordered_set<NodeId> placed;
  std::vector<std::vector<std::size_t>> checks_after(problem.free_nodes.size() + 1);
  {
    std::vector<bool> scheduled(watchers.size(), false);
    for (std::size_t round = 0; round < watchers.size(); ++round) {
      std::size_t best = watchers.size();
      std::size_t best_missing = SIZE_MAX;
      for (std::size_t w = 0; w < watchers.size(); ++w) {
        if (scheduled[w]) continue;
        std::size_t missing = 0;
        for (NodeId u : watchers[w].free_members)
          if (!placed.count(u)) ++missing;
        if (missing < best_missing) {
          best_missing = missing;
          best = w;
        }
      }
      if (best == watchers.size()) break;
      scheduled[best] = true;
      std::vector<NodeId> missing;
      for (NodeId u : watchers[best].free_members)
        if (!placed.count(u)) missing.push_back(u);
      std::sort(missing.begin(), missing.end());
      for (NodeId u : missing) {
        placed.insert(u);
        order.push_back(u);
      }
      checks_after[order.size()].push_back(best);
    }
    std::vector<NodeId> rest;
    for (NodeId v : problem.free_nodes)
      if (!placed.count(v)) rest.push_back(v);
    std::sort(rest.begin(), rest.end());
    for (NodeId v : rest) order.push_back(v);
  }

  // Assignments write straight through to every watcher view that carries
  // the node (map slots are stable once the views exist).
  std::vector<std::vector<Label*>> slots(order.size());
  for (std::size_t d = 0; d < order.size(); ++d)
    for (Watcher& w : watchers)
      if (w.view.labels.count(order[d])) slots[d].push_back(&w.view.labels[order[d]]);

  auto evaluate = [&](std::size_t w) -> bool {
    return scheme.verifier(watchers[w].view).accepted;
  };

  // Watchers with no free members are constants; decide them up front.
  for (auto w : checks_after[0]) {
    ++result.steps;
    if (!evaluate(w)) return result;  // exhausted with zero hits
  }

  if (order.empty()) {
    ++result.found;
    if (!on_found(current)) result.status = SearchStatus::found;
    return result;
  }

  std::vector<std::vector<Label>> domains(order.size());
  for (std::size_t d = 0; d < order.size(); ++d)
    domains[d] = candidate_labels(problem.max_bits[free_index.at(order[d])]);

  // Iterative DFS over assignment depths.
  std::vector<std::size_t> choice(order.size(), 0);
  std::size_t depth = 0;
  while (true) {
    if (choice[depth] >= domains[depth].size()) {
      if (depth == 0) return result;  // space exhausted
      choice[depth] = 0;
      --depth;
      ++choice[depth];
      continue;
    }
    const Label& picked = domains[depth][choice[depth]];
    current[order[depth]] = picked;
    for (Label* slot : slots[depth]) *slot = picked;
    if (++result.steps > problem.budget) {
      result.status = SearchStatus::budget_exceeded;
      return result;
    }
    bool pruned = false;
    for (std::size_t w : checks_after[depth + 1]) {
      ++result.steps;
      if (!evaluate(w)) {
        pruned = true;
        break;
      }
    }
    if (pruned) {
      ++choice[depth];
      continue;
    }
    if (depth + 1 == order.size()) {
      ++result.found;
      if (!on_found(current)) {
        result.status = SearchStatus::found;
        return result;
      }
      ++choice[depth];
      continue;
    }
    ++depth;
  }
}

LabelSearchResult find_all_accept(const LabelSearchProblem& problem) {
  LabelSearchResult result;
  EnumerationResult e = enumerate_all_accept(problem, [&](const Labeling& labeling) {
    result.labeling = labeling;
    return false;  // stop at the first hit
  });
  result.steps = e.steps;
  result.status = e.status == SearchStatus::found ? SearchStatus::found : e.status;
  return result;
}

namespace {

SoundnessReport soundness_from_search(const Scheme& s, const Predicate& pred,
                                      const Configuration& cfg, std::vector<int> bounds,
                                      std::uint64_t budget) {
  if (pred(cfg)) throw SchemeError("soundness check requires a no-instance");
  LabelSearchProblem problem;
  problem.cfg = &cfg;
  problem.scheme = &s;
  problem.free_nodes = cfg.graph.nodes();
  problem.max_bits = std::move(bounds);
  problem.must_accept = cfg.graph.nodes();
  problem.budget = budget;
  LabelSearchResult search = find_all_accept(problem);

  SoundnessReport report;
  report.status = search.status;
  report.steps = search.steps;
  report.ok = search.status == SearchStatus::none;
  if (search.status == SearchStatus::found) report.counterexample = search.labeling;
  return report;
}

}  // namespace

SoundnessReport check_soundness_exhaustive(const Scheme& s, const Predicate& pred,
                                           const Configuration& cfg, int max_bits,
                                           std::uint64_t budget) {
  return soundness_from_search(s, pred, cfg,
                               std::vector<int>(cfg.graph.node_count(), max_bits), budget);
}

SoundnessReport check_soundness_exhaustive(const Scheme& s, const Predicate& pred,
                                           const Configuration& cfg,
                                           const std::vector<int>& max_bits_per_node,
                                           std::uint64_t budget) {
  if (max_bits_per_node.size() != cfg.graph.node_count())
    throw SchemeError("per-node bound vector size mismatch");
  return soundness_from_search(s, pred, cfg, max_bits_per_node, budget);
}

FuzzReport check_soundness_fuzz(const Scheme& s, const Predicate& pred,
                                const Configuration& cfg, const FuzzOptions& options) {
  if (pred(cfg)) throw SchemeError("fuzz soundness requires a no-instance");
  FuzzReport report;
  report.note = "randomized probing: a pass is evidence, not proof";
  if (options.trials == 0) {
    report.ok = true;
    report.note += " (trials=0, vacuous)";
    return report;
  }
  Rng rng(derive_seed(options.seed, 0x66757a7aULL));
  const std::vector<NodeId>& nodes = cfg.graph.nodes();

  auto random_label = [&](int cap) {
    int len = int(rng.below(std::uint64_t(cap) + 1));
    Label l;
    for (int i = 0; i < len; ++i) l.push_back(rng.next_bool());
    return l;
  };

  for (std::size_t trial = 0; trial < options.trials; ++trial) {
    Labeling labels;
    int strategy = int(trial % 3);
    if (strategy != 0 && !options.nearby_honest) strategy = 0;
    if (strategy == 0) {
      for (NodeId v : nodes) labels[v] = random_label(options.random_bits_cap);
    } else if (strategy == 1) {
      // mutate a nearby honest labeling: flip / truncate / extend
      labels = *options.nearby_honest;
      std::size_t edits = 1 + rng.below(3);
      for (std::size_t e = 0; e < edits; ++e) {
        NodeId v = nodes[rng.below(nodes.size())];
        Label& l = labels[v];
        switch (rng.below(3)) {
          case 0: {
            if (l.empty()) break;
            std::size_t pos = rng.below(l.size());
            Label flipped;
            for (std::size_t i = 0; i < l.size(); ++i)
              flipped.push_back(i == pos ? !l.bit(i) : l.bit(i));
            l = flipped;
            break;
          }
          case 1:
            if (!l.empty()) l = l.slice(0, l.size() - 1);
            break;
          default:
            l.push_back(rng.next_bool());
        }
      }
    } else {
      // splice honest labels across random node pairs
      labels = *options.nearby_honest;
      std::size_t swaps = 1 + rng.below(nodes.size());
      for (std::size_t e = 0; e < swaps; ++e) {
        NodeId a = nodes[rng.below(nodes.size())];
        NodeId b = nodes[rng.below(nodes.size())];
        std::swap(labels[a], labels[b]);
      }
    }
    auto verdicts = run_scheme(s, cfg, labels);
    ++report.trials_run;
    if (all_accept(verdicts)) {
      report.ok = false;
      report.violating_trial = trial;
      report.counterexample = labels;
      return report;
    }
  }
  report.ok = true;
  return report;
}

}  // namespace pls
