#include "pls/schemes/equality.hpp"

#include <algorithm>
#include <map>

namespace pls {

namespace {

int index_width(int m) {
  int w = 1;
  while ((1 << w) < m) ++w;
  return w;
}

/// The two endpoint nodes: odd degree greater than two.
std::vector<NodeId> endpoint_nodes(const Graph& g) {
  std::vector<NodeId> out;
  for (NodeId v : g.nodes()) {
    std::size_t deg = g.degree(v);
    if (deg > 2 && deg % 2 == 1) out.push_back(v);
  }
  return out;
}

}  // namespace

Graph EqualityGadget::graph() const { return make_layered(t, m); }

Configuration EqualityGadget::make_config(const BitString& left, const BitString& right) const {
  if (int(left.size()) != m * m || int(right.size()) != m * m)
    throw SchemeError("equality gadget inputs must have m^2 bits");
  Configuration cfg = Configuration::plain(graph());
  cfg.input[layered_layer(1, t, m).front()] = left;
  cfg.input[layered_layer(2 * t + 3, t, m).front()] = right;
  return cfg;
}

std::vector<int> EqualityGadget::honest_label_bits() const {
  Graph g = graph();
  std::vector<int> bits;
  for (NodeId v : g.nodes())
    bits.push_back(layered_layer_of(v, t, m) % 2 == 0 ? index_width(m) + m : 0);
  return bits;
}

std::pair<int, int> layered_params(const Graph& g) {
  auto endpoints = endpoint_nodes(g);
  if (endpoints.size() != 2) throw GraphError("not a layered gadget graph");
  int m = int(g.degree(endpoints.front()));
  // n = (t+2) + (t+1) m
  std::size_t n = g.node_count();
  if (n < std::size_t(2 * m + 3)) throw GraphError("not a layered gadget graph");
  if ((n - (std::size_t(m) + 2)) % (std::size_t(m) + 1) != 0)
    throw GraphError("not a layered gadget graph");
  int t = int((n - (std::size_t(m) + 2)) / (std::size_t(m) + 1));
  if (t < 1 || !(make_layered(t, m) == g)) throw GraphError("not a layered gadget graph");
  return {t, m};
}

EqualityGadget make_equality_gadget(int t, int m) {
  if (t < 1) throw SchemeError("equality gadget needs t >= 1");
  if (m < 3 || m % 2 == 0) throw SchemeError("equality gadget needs odd m >= 3");
  EqualityGadget gadget;
  gadget.t = t;
  gadget.m = m;

  gadget.predicate = [](const Configuration& cfg) -> bool {
    auto endpoints = endpoint_nodes(cfg.graph);
    if (endpoints.size() != 2) return false;
    std::size_t m2 = cfg.graph.degree(endpoints[0]);
    const BitString& a = cfg.input_of(endpoints[0]);
    const BitString& b = cfg.input_of(endpoints[1]);
    return a.size() == m2 * m2 && b.size() == m2 * m2 && a == b;
  };

  Scheme s;
  s.name = "equality-gadget";
  s.t = 1;

  s.prover = [t, m, pred = gadget.predicate](const Configuration& cfg) -> Labeling {
    if (!pred(cfg)) throw SchemeError("equality gadget prover needs matching inputs");
    const BitString& left = cfg.input_of(layered_layer(1, t, m).front());
    const int iw = index_width(m);
    Labeling labels;
    for (NodeId v : cfg.graph.nodes()) labels[v] = Label();
    for (int layer = 2; layer <= 2 * t + 2; layer += 2) {
      auto ids = layered_layer(layer, t, m);  // increasing id = segment rank
      for (int i = 0; i < m; ++i) {
        Label l = BitString::from_uint(std::uint64_t(i), iw);
        l.append(left.slice(std::size_t(i) * m, m));
        labels[ids[i]] = l;
      }
    }
    return labels;
  };

  // verdicts split by degree: 2 = relay (even layer), even > 2 = interior
  // odd layer, odd > 2 = endpoint
  s.verifier = [](const LocalView& view) -> Verdict {
    const NodeId v = view.center;
    const std::size_t deg = view.subgraph.degree(v);
    if (deg == 2) return Verdict::accept();
    if (deg < 2) return Verdict::reject();

    const int mm = int(deg % 2 == 0 ? deg / 2 : deg);
    const int iw = index_width(mm);
    const int want_len = iw + mm;
    std::map<int, std::vector<BitString>> segments;
    for (NodeId u : view.subgraph.neighbors(v)) {
      const Label& l = view.label_of(u);
      if (int(l.size()) != want_len) return Verdict::reject();
      int idx = int(l.to_uint(0, iw));
      if (idx >= mm) return Verdict::reject();
      segments[idx].push_back(l.slice(iw, mm));
    }
    if (deg % 2 == 0) {
      // interior: each index exactly twice, matching segments
      for (int i = 0; i < mm; ++i) {
        auto it = segments.find(i);
        if (it == segments.end() || it->second.size() != 2) return Verdict::reject();
        if (!(it->second[0] == it->second[1])) return Verdict::reject();
      }
      return Verdict::accept();
    }
    // endpoint: each index exactly once, concatenation equals the input
    const BitString& input = view.input_of(v);
    if (int(input.size()) != mm * mm) return Verdict::reject();
    BitString concat;
    for (int i = 0; i < mm; ++i) {
      auto it = segments.find(i);
      if (it == segments.end() || it->second.size() != 1) return Verdict::reject();
      concat.append(it->second[0]);
    }
    if (!(concat == input)) return Verdict::reject();
    return Verdict::accept();
  };

  gadget.scheme = s;
  return gadget;
}

BitString witness_from_labeling(const Graph& g, const Labeling& labels) {
  std::vector<BitString> parts;
  for (NodeId v : g.nodes()) parts.push_back(labels.at(v));
  return BitString::encode_tuple(parts);
}

Scheme widen_scheme(const Scheme& s, int t) {
  if (t < s.t) throw SchemeError("widen_scheme cannot shrink the radius");
  Scheme wide = s;
  wide.t = t;
  wide.name = s.name + "@" + std::to_string(t);
  wide.verifier = [inner = s.verifier, r = s.t](const LocalView& view) -> Verdict {
    LocalView sub = extract_view(view.subgraph, view.inputs, view.labels, view.center, r,
                                 view.n_declared);
    return inner(sub);
  };
  return wide;
}

CommTranscript reduce_to_eq(const Scheme& t_pls, int t, int m, const BitString& alice_input,
                            const BitString& bob_input, const BitString& witness) {
  if (t_pls.t > t)
    throw SchemeError("reduction needs a scheme of radius <= the gadget's t");
  EqualityGadget gadget = make_equality_gadget(t, m);
  Graph g = gadget.graph();

  CommTranscript tr;
  tr.alice_input = alice_input;
  tr.bob_input = bob_input;
  tr.witness = witness;

  auto parts = BitString::decode_tuple(witness);
  if (!parts || parts->size() != g.node_count()) {
    tr.parse_failure = true;
    return tr;  // both players reject a malformed witness
  }
  Labeling labels;
  {
    std::size_t i = 0;
    for (NodeId v : g.nodes()) labels[v] = (*parts)[i++];
  }

  const NodeId left_node = layered_layer(1, t, m).front();
  const NodeId right_node = layered_layer(2 * t + 3, t, m).front();

  // each player knows the topology and only their own endpoint input
  auto simulate = [&](bool alice) -> bool {
    Configuration cfg = Configuration::plain(g);
    if (alice)
      cfg.input[left_node] = alice_input;
    else
      cfg.input[right_node] = bob_input;
    NodeId hidden = alice ? right_node : left_node;
    int lo = alice ? 1 : t + 2;
    int hi = alice ? t + 1 : 2 * t + 3;
    for (NodeId v : g.nodes()) {
      int layer = layered_layer_of(v, t, m);
      if (layer < lo || layer > hi) continue;
      LocalView view = extract_view(cfg, labels, v, t_pls.t);
      if (view.subgraph.has_node(hidden))
        throw std::logic_error("reduction geometry violated: simulated view sees the "
                               "opposite input");
      if (!t_pls.verifier(view).accepted) return false;
    }
    return true;
  };

  tr.alice_accepts = simulate(true);
  tr.bob_accepts = simulate(false);
  return tr;
}

}  // namespace pls
