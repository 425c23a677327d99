#pragma once

#include "pls/scheme.hpp"

namespace pls {

// Spanning-tree certification, the stock example of a 1-PLS with
// logarithmic cost. A node's input lists the ids of its tree neighbors as
// fixed 32-bit fields; an edge is designated when both endpoints list each
// other. Labels are (root, parent, distance), three 32-bit fields. All
// nodes carry the same root; distance decreases by exactly one toward the
// unique parent, which forces the designated edges to form a spanning tree.

inline constexpr int kTreeIdBits = 32;
inline constexpr int kTreeLabelBits = 3 * kTreeIdBits;

/// Designated edges of a configuration (mutual listings only).
std::vector<std::pair<NodeId, NodeId>> designated_edges(const Configuration& cfg);

/// Ground truth: do the designated edges form a spanning tree of the graph?
bool spanning_tree_predicate(const Configuration& cfg);

/// Input map designating the given edge set.
std::unordered_map<NodeId, BitString> encode_tree_input(
    const Graph& g, const std::vector<std::pair<NodeId, NodeId>>& edges);

/// Uniformly random-ish spanning tree input on a connected graph (seeded).
Configuration spanning_tree_instance(const Graph& g, std::uint64_t seed);

Scheme make_spanning_tree_pls();

}  // namespace pls
