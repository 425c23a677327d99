#pragma once

#include <any>
#include <functional>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "pls/graph.hpp"
#include "pls/partition.hpp"

namespace pls {

using Label = BitString;
using Labeling = std::unordered_map<NodeId, Label>;

struct SchemeError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// What one node sees: the labeled, input-carrying induced subgraph of its
/// t-ball, plus the declared graph size. Verifiers are pure functions of this.
struct LocalView {
  NodeId center = 0;
  int radius = 0;
  Graph subgraph;
  std::unordered_map<NodeId, BitString> inputs;
  std::unordered_map<NodeId, Label> labels;
  std::size_t n_declared = 0;

  const Label& label_of(NodeId v) const;
  const BitString& input_of(NodeId v) const;
};

struct Verdict {
  bool accepted = false;
  std::any aux;  // optional output, meaningful only on accept

  static Verdict reject() { return {}; }
  static Verdict accept(std::any a = {}) { return {true, std::move(a)}; }
};

using Predicate = std::function<bool(const Configuration&)>;

/// Hook signature for scheme-provided extension solvers (used by the
/// tradeoff compiler): given the surrounding view, the cluster, the fixed
/// labels on nearby separating-set nodes and the nodes that must accept,
/// produce a labeling of the free nodes or give up. Any result is
/// re-validated by the caller, so a hook may be incomplete but never unsound.
struct ExtensionRequest {
  const LocalView* view = nullptr;
  std::vector<NodeId> cluster;          // C
  std::vector<NodeId> free_nodes;       // C \ X
  Labeling fixed;                       // decoded labels on X ∩ B_2(C)
  std::vector<NodeId> must_accept;      // H_C
};
using ExtensionHook = std::function<std::optional<Labeling>(const ExtensionRequest&)>;

/// A proof labeling scheme: verification radius, honest prover (defined on
/// yes-instances, throws SchemeError elsewhere) and a deterministic
/// verifier over local views.
struct Scheme {
  std::string name;
  int t = 1;
  std::function<Labeling(const Configuration&)> prover;
  std::function<Verdict(const LocalView&)> verifier;

  // Optional extras some schemes carry.
  std::function<TsPartition(const Configuration&)> prover_partition;  // TS-certifying schemes
  ExtensionHook extension_hook;                                       // 1-PLS extension finder
};

/// Snapshot of the radius-t neighborhood of v.
LocalView extract_view(const Graph& g, const std::unordered_map<NodeId, BitString>& inputs,
                       const Labeling& labeling, NodeId v, int t,
                       std::size_t n_declared = 0);
LocalView extract_view(const Configuration& cfg, const Labeling& labeling, NodeId v, int t);

/// Per-node verdicts of one verifier pass.
std::unordered_map<NodeId, Verdict> run_scheme(const Scheme& s, const Configuration& cfg,
                                               const Labeling& labeling);

bool all_accept(const std::unordered_map<NodeId, Verdict>& verdicts);

struct CompletenessReport {
  bool ok = false;
  std::size_t configs_checked = 0;
  // (config index, rejecting node) per failure
  std::vector<std::pair<std::size_t, NodeId>> failures;
};

/// Prover + verifier round trip over yes-instances; every node must accept.
CompletenessReport check_completeness(const Scheme& s, const Predicate& pred,
                                      const std::vector<Configuration>& cfgs);

/// Max honest label length (bits) over all nodes and configurations.
std::size_t scheme_cost(const Scheme& s, const std::vector<Configuration>& cfgs);

}  // namespace pls
