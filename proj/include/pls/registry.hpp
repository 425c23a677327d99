#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "pls/scheme.hpp"

namespace pls {

/// One CLI-facing scheme with everything the harness needs to drive it:
/// build an instance of the scheme suited to a configuration, produce
/// valid (and where meaningful, invalid) configurations, and provide a
/// nearby honest labeling for fuzzing.
struct SchemeEntry {
  std::string name;
  Predicate predicate;
  /// Scheme instance for this configuration (may depend on n and seed).
  std::function<Scheme(const Configuration&, std::uint64_t)> make;
  /// Fresh random yes-instance.
  std::function<Configuration(std::uint64_t)> gen_valid;
  /// Yes-instance on a caller-supplied graph (throws if unsuitable).
  std::function<Configuration(const Graph&, std::uint64_t)> instantiate;
  /// No-instance on a caller-supplied graph, when the predicate has one.
  std::function<std::optional<Configuration>(const Graph&, std::uint64_t)> gen_invalid;
  /// Honest labels of a valid configuration near the given no-instance.
  std::function<std::optional<Labeling>(const Configuration&, std::uint64_t)> nearby_honest;
  /// Scheme parameters worth echoing in run reports (radius, eps, solver).
  std::function<std::map<std::string, std::string>(const Configuration&)> metadata;
};

std::vector<std::string> registry_names();
const SchemeEntry& registry_get(const std::string& name);

}  // namespace pls
