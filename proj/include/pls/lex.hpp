#pragma once

#include <functional>
#include <optional>

#include "pls/graph.hpp"
#include "pls/scheme.hpp"

namespace pls {

// Splitting a string across a cluster: the string is padded with a '1'
// marker and zero fill to the smallest multiple of |C| strictly larger than
// its length, then cut into |C| equal blocks handed out in increasing id
// order. Decoding concatenates the blocks and strips the padding; the
// blocks of one cluster must all have the same length.

/// Block of the padded string owned by v (v must be in c).
Label lex_encode(const Cluster& c, const BitString& s, NodeId v);

/// Inverse on honest labels; nullopt when block lengths differ, a label is
/// absent, or the padding marker is missing (callers treat that as reject).
std::optional<BitString> lex_decode(const Cluster& c,
                                    const std::function<std::optional<Label>(NodeId)>& label_of);
std::optional<BitString> lex_decode(const Cluster& c, const Labeling& labels);

}  // namespace pls
