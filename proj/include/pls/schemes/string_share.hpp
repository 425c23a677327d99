#pragma once

#include <functional>
#include <optional>

#include "pls/scheme.hpp"

namespace pls {

// Sharing one short string with O(1)-bit labels: the prover peels connected
// clusters of size exactly r so that every node is within distance r of
// one, stores a lex block of the string on each cluster, and marks the
// peeled-off separator nodes with an InU bit. Verification radius 4r+2: a
// node rejects unless a size-r cluster of InU=0 nodes sits within distance
// r and all fully visible clusters decode to the same string, which it
// outputs.

struct ShareDecomposition {
  std::vector<Cluster> clusters;  // each connected, size exactly r
  std::vector<NodeId> u_set;      // the remaining nodes, sorted
};

/// Peeling procedure; on a connected graph with |V| > r every node ends up
/// within distance r of some cluster.
ShareDecomposition share_decomposition(const Graph& g, int r);

/// Per-node fields of the sharing labels: the InU bit and the block
/// fragment. nullopt marks an unparseable label.
using ShareFields = std::function<std::optional<std::pair<bool, Label>>(NodeId)>;

/// Verification core, reusable by schemes that embed sharing labels inside
/// larger ones. Returns the decoded common string, or nullopt for reject.
std::optional<BitString> share_verify(const LocalView& view, int r, const ShareFields& fields);

/// |s| <= r required. Aux output of an accepting node is the shared string.
Scheme make_string_share(int r, const BitString& s);

}  // namespace pls
