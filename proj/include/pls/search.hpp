#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "pls/scheme.hpp"

namespace pls {

struct BudgetError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline constexpr std::uint64_t kDefaultSearchBudget = std::uint64_t(1) << 24;

/// Search for a labeling that makes every node in `must_accept` accept.
/// Free nodes range over all bit strings of length 0..max_bits (per node);
/// the rest carry `fixed` labels. The search is complete: it backtracks as
/// soon as some target node's ball is fully labeled and rejects, which
/// prunes whole subtrees without skipping any labeling. `budget` caps
/// assignments plus verdict evaluations.
struct LabelSearchProblem {
  const Configuration* cfg = nullptr;
  const Scheme* scheme = nullptr;
  std::vector<NodeId> free_nodes;
  std::vector<int> max_bits;  // per free node, parallel to free_nodes
  Labeling fixed;
  std::vector<NodeId> must_accept;
  std::uint64_t budget = kDefaultSearchBudget;
};

enum class SearchStatus { found, none, budget_exceeded };

struct LabelSearchResult {
  SearchStatus status = SearchStatus::none;
  Labeling labeling;  // total on free ∪ fixed when status == found
  std::uint64_t steps = 0;
};

LabelSearchResult find_all_accept(const LabelSearchProblem& problem);

/// Complete enumeration variant: on_found fires for every labeling making
/// all targets accept and returns whether to keep searching. The returned
/// status is `none` when the space was exhausted, `found` when a callback
/// stopped the search early.
struct EnumerationResult {
  SearchStatus status = SearchStatus::none;
  std::uint64_t steps = 0;
  std::uint64_t found = 0;
};
EnumerationResult enumerate_all_accept(const LabelSearchProblem& problem,
                                       const std::function<bool(const Labeling&)>& on_found);

struct SoundnessReport {
  SearchStatus status = SearchStatus::none;
  bool ok = false;             // no all-accept labeling exists (proved)
  Labeling counterexample;     // when status == found
  std::uint64_t steps = 0;
};

/// Exhaustive soundness at micro scale: prove that every labeling with
/// per-node labels of length <= max_bits has a rejecting node. The
/// configuration must be a no-instance of pred.
SoundnessReport check_soundness_exhaustive(const Scheme& s, const Predicate& pred,
                                           const Configuration& cfg, int max_bits,
                                           std::uint64_t budget = kDefaultSearchBudget);

/// Same with per-node length bounds (e.g. each node bounded by its honest
/// label length on the nearest valid configuration).
SoundnessReport check_soundness_exhaustive(const Scheme& s, const Predicate& pred,
                                           const Configuration& cfg,
                                           const std::vector<int>& max_bits_per_node,
                                           std::uint64_t budget = kDefaultSearchBudget);

struct FuzzOptions {
  std::size_t trials = 1000;
  std::uint64_t seed = 0;
  int random_bits_cap = 8;  // label length cap for the random strategy
  // labels of a nearby yes-instance, mutated and spliced when provided
  std::optional<Labeling> nearby_honest;
};

struct FuzzReport {
  bool ok = false;  // evidence only; a pass proves nothing
  std::size_t trials_run = 0;
  std::optional<std::size_t> violating_trial;
  Labeling counterexample;
  std::string note;
};

/// Randomized soundness probing where exhaustion is infeasible: random
/// labelings, mutations of nearby honest labelings, and label splicing
/// across nodes. ok iff every trial had a rejecting node.
FuzzReport check_soundness_fuzz(const Scheme& s, const Predicate& pred,
                                const Configuration& cfg, const FuzzOptions& options);

}  // namespace pls
