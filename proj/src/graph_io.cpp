#include "pls/graph_io.hpp"

#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <vector>

namespace pls {

void write_graph(std::ostream& os, const Configuration& cfg) {
  const Graph& g = cfg.graph;
  os << "n " << g.node_count() << "\n";
  for (NodeId v : g.nodes()) os << "v " << v << "\n";
  for (NodeId v : g.nodes())
    for (NodeId u : g.neighbors(v))
      if (v < u) os << "e " << v << " " << u << "\n";
  for (NodeId v : g.nodes()) {
    auto it = cfg.input.find(v);
    if (it != cfg.input.end() && !it->second.empty())
      os << "i " << v << " " << it->second.to_hex_marked() << "\n";
  }
}

Configuration read_graph(std::istream& is) {
  std::string line;
  bool have_count = false;
  std::size_t declared = 0;
  std::vector<NodeId> nodes;
  std::set<NodeId> node_set;
  std::vector<std::pair<NodeId, NodeId>> edges;
  std::set<std::pair<NodeId, NodeId>> edge_set;
  std::map<NodeId, BitString> inputs;
  std::size_t lineno = 0;

  auto fail = [&](const std::string& msg) -> void {
    throw ParseError("graph file line " + std::to_string(lineno) + ": " + msg);
  };

  while (std::getline(is, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::string tag;
    if (!(ls >> tag) || tag[0] == '#') continue;
    if (tag == "n") {
      if (have_count) fail("duplicate count line");
      if (!(ls >> declared)) fail("bad count");
      have_count = true;
    } else if (tag == "v") {
      NodeId v;
      if (!(ls >> v)) fail("bad node line");
      if (!node_set.insert(v).second) fail("duplicate node " + std::to_string(v));
      nodes.push_back(v);
    } else if (tag == "e") {
      NodeId a, b;
      if (!(ls >> a >> b)) fail("bad edge line");
      if (a == b) fail("self-loop at " + std::to_string(a));
      auto key = std::minmax(a, b);
      if (!edge_set.insert({key.first, key.second}).second)
        fail("duplicate edge " + std::to_string(a) + "-" + std::to_string(b));
      edges.push_back({a, b});
    } else if (tag == "i") {
      NodeId v;
      std::string hex;
      if (!(ls >> v >> hex)) fail("bad input line");
      auto bits = BitString::from_hex_marked(hex);
      if (!bits) fail("bad input hex '" + hex + "'");
      if (inputs.count(v)) fail("duplicate input for node " + std::to_string(v));
      inputs[v] = *bits;
    } else {
      fail("unknown tag '" + tag + "'");
    }
    std::string rest;
    if (ls >> rest && rest[0] != '#') fail("trailing tokens");
  }

  if (!have_count) throw ParseError("graph file: missing count line");
  if (nodes.size() != declared)
    throw ParseError("graph file: declared " + std::to_string(declared) + " nodes, found " +
                     std::to_string(nodes.size()));

  Configuration cfg;
  for (NodeId v : nodes) cfg.graph.add_node(v);
  for (auto [a, b] : edges) {
    if (!node_set.count(a) || !node_set.count(b))
      throw ParseError("graph file: edge references unknown node");
    cfg.graph.add_edge(a, b);
  }
  for (NodeId v : nodes) cfg.input[v] = BitString();
  for (auto& [v, bits] : inputs) {
    if (!node_set.count(v)) throw ParseError("graph file: input for unknown node");
    cfg.input[v] = bits;
  }
  return cfg;
}

void write_graph_file(const std::string& path, const Configuration& cfg) {
  std::ofstream os(path);
  if (!os) throw ParseError("cannot open for writing: " + path);
  write_graph(os, cfg);
}

Configuration read_graph_file(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw ParseError("cannot open: " + path);
  return read_graph(is);
}

void write_labeling(std::ostream& os, const std::unordered_map<NodeId, BitString>& labels) {
  std::map<NodeId, BitString> ordered(labels.begin(), labels.end());
  for (const auto& [v, bits] : ordered)
    os << "l " << v << " " << (bits.empty() ? "-" : bits.to_hex()) << " " << bits.size() << "\n";
}

std::unordered_map<NodeId, BitString> read_labeling(std::istream& is) {
  std::unordered_map<NodeId, BitString> out;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::string tag;
    if (!(ls >> tag) || tag[0] == '#') continue;
    NodeId v;
    std::string hex;
    std::size_t bitlen;
    if (tag != "l" || !(ls >> v >> hex >> bitlen))
      throw ParseError("labeling line " + std::to_string(lineno) + ": malformed");
    if (hex == "-") hex.clear();
    auto bits = BitString::from_hex(hex, bitlen);
    if (!bits) throw ParseError("labeling line " + std::to_string(lineno) + ": bad hex");
    out[v] = *bits;
  }
  return out;
}

}  // namespace pls
