#pragma once

#include <iosfwd>
#include <string>
#include <unordered_map>

#include "pls/graph.hpp"

namespace pls {

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Graph file format (text, whitespace separated, '#' starts a comment line):
//   n <count>
//   v <id>            one line per node
//   e <id1> <id2>     one line per edge, either endpoint order
//   i <id> <hex>      optional per-node input; hex carries a '1' marker pad
//                     so any bit length round-trips (see BitString)
// Duplicate nodes/edges, self-loops, unknown ids and count mismatches are
// errors. Reading is followed by normalization: edges are symmetric and
// missing inputs default to the empty string.

void write_graph(std::ostream& os, const Configuration& cfg);
Configuration read_graph(std::istream& is);

void write_graph_file(const std::string& path, const Configuration& cfg);
Configuration read_graph_file(const std::string& path);

// Labeling dump format: `l <id> <hex-of-bits> <bitlen>` lines.
void write_labeling(std::ostream& os, const std::unordered_map<NodeId, BitString>& labels);
std::unordered_map<NodeId, BitString> read_labeling(std::istream& is);

}  // namespace pls
