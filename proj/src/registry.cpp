#include "pls/registry.hpp"

#include <map>

#include "pls/rng.hpp"
#include "pls/schemes/equality.hpp"
#include "pls/schemes/spanning_tree.hpp"
#include "pls/schemes/string_share.hpp"
#include "pls/schemes/tradeoff.hpp"
#include "pls/schemes/ts_cert.hpp"

namespace pls {

namespace {

Graph random_graph_for(std::uint64_t seed, std::size_t n_lo, std::size_t n_hi) {
  Rng rng(derive_seed(seed, 0x67656e67ULL));
  std::size_t n = n_lo + rng.below(n_hi - n_lo + 1);
  return make_random_connected(n, n / 3 + 1, derive_seed(seed, 1));
}

BitString share_payload_for(std::uint64_t seed, int r) {
  Rng rng(derive_seed(seed, 0x73686172ULL));
  int len = int(rng.below(std::uint64_t(r) + 1));
  BitString s;
  for (int i = 0; i < len; ++i) s.push_back(rng.next_bool());
  return s;
}

std::pair<int, int> gadget_params_for(std::uint64_t seed) {
  static const std::pair<int, int> options[] = {{1, 3}, {1, 5}, {2, 3}};
  Rng rng(derive_seed(seed, 0x67616467ULL));
  return options[rng.below(3)];
}

BitString random_bits(Rng& rng, std::size_t len) {
  BitString s;
  for (std::size_t i = 0; i < len; ++i) s.push_back(rng.next_bool());
  return s;
}

SchemeEntry spanning_tree_entry() {
  SchemeEntry e;
  e.name = "spanning-tree";
  e.predicate = spanning_tree_predicate;
  e.make = [](const Configuration&, std::uint64_t) { return make_spanning_tree_pls(); };
  e.instantiate = [](const Graph& g, std::uint64_t seed) {
    return spanning_tree_instance(g, seed);
  };
  e.gen_valid = [e_inst = e.instantiate](std::uint64_t seed) {
    return e_inst(random_graph_for(seed, 16, 48), derive_seed(seed, 2));
  };
  e.gen_invalid = [](const Graph& g, std::uint64_t seed) -> std::optional<Configuration> {
    // designate a tree minus one edge: a forest, never a spanning tree
    Configuration cfg = spanning_tree_instance(g, seed);
    auto edges = designated_edges(cfg);
    if (edges.empty()) return std::nullopt;
    Rng rng(derive_seed(seed, 3));
    edges.erase(edges.begin() + rng.below(edges.size()));
    cfg.input = encode_tree_input(g, edges);
    return cfg;
  };
  e.nearby_honest = [](const Configuration& cfg, std::uint64_t seed) -> std::optional<Labeling> {
    Configuration valid = spanning_tree_instance(cfg.graph, derive_seed(seed, 4));
    return make_spanning_tree_pls().prover(valid);
  };
  return e;
}

SchemeEntry string_share_entry() {
  SchemeEntry e;
  e.name = "string-share";
  e.predicate = [](const Configuration&) { return true; };
  e.make = [](const Configuration&, std::uint64_t seed) {
    return make_string_share(4, share_payload_for(seed, 4));
  };
  e.instantiate = [](const Graph& g, std::uint64_t) { return Configuration::plain(g); };
  e.gen_valid = [](std::uint64_t seed) {
    return Configuration::plain(random_graph_for(seed, 16, 48));
  };
  return e;
}

SchemeEntry equality_entry() {
  SchemeEntry e;
  e.name = "equality-gadget";
  e.predicate = make_equality_gadget(1, 3).predicate;  // structural, (t,m)-independent
  e.make = [](const Configuration& cfg, std::uint64_t) {
    auto [t, m] = layered_params(cfg.graph);
    return make_equality_gadget(t, m).scheme;
  };
  e.instantiate = [](const Graph& g, std::uint64_t seed) {
    auto [t, m] = layered_params(g);
    Rng rng(derive_seed(seed, 5));
    BitString x = random_bits(rng, std::size_t(m) * m);
    return make_equality_gadget(t, m).make_config(x, x);
  };
  e.gen_valid = [e_inst = e.instantiate](std::uint64_t seed) {
    auto [t, m] = gadget_params_for(seed);
    return e_inst(make_layered(t, m), derive_seed(seed, 6));
  };
  e.gen_invalid = [](const Graph& g, std::uint64_t seed) -> std::optional<Configuration> {
    auto [t, m] = layered_params(g);
    Rng rng(derive_seed(seed, 7));
    BitString x = random_bits(rng, std::size_t(m) * m);
    BitString y = x;
    // flip one bit
    std::size_t pos = rng.below(y.size());
    BitString flipped;
    for (std::size_t i = 0; i < y.size(); ++i)
      flipped.push_back(i == pos ? !y.bit(i) : y.bit(i));
    return make_equality_gadget(t, m).make_config(x, flipped);
  };
  e.nearby_honest = [](const Configuration& cfg, std::uint64_t) -> std::optional<Labeling> {
    auto [t, m] = layered_params(cfg.graph);
    auto gadget = make_equality_gadget(t, m);
    NodeId left = layered_layer(1, t, m).front();
    Configuration valid = gadget.make_config(cfg.input_of(left), cfg.input_of(left));
    return gadget.scheme.prover(valid);
  };
  return e;
}

SchemeEntry ts_logn_entry() {
  SchemeEntry e;
  e.name = "ts-cert-logn";
  e.predicate = [](const Configuration&) { return true; };  // the carving always exists
  e.make = [](const Configuration& cfg, std::uint64_t) {
    int L = log2_ceil(cfg.graph.node_count());
    return make_ts_cert_logn(32 * L, Rational(1, 2));
  };
  e.instantiate = [](const Graph& g, std::uint64_t) { return Configuration::plain(g); };
  e.gen_valid = [](std::uint64_t seed) {
    return Configuration::plain(random_graph_for(seed, 16, 48));
  };
  return e;
}

SchemeEntry ts_const_entry() {
  SchemeEntry e;
  e.name = "ts-cert-const";
  e.predicate = [](const Configuration&) { return true; };
  e.make = [](const Configuration& cfg, std::uint64_t) {
    return make_ts_cert_const(1, cfg.graph.node_count());
  };
  e.instantiate = [](const Graph& g, std::uint64_t) { return Configuration::plain(g); };
  e.gen_valid = [](std::uint64_t seed) {
    return Configuration::plain(random_graph_for(seed, 32, 64));
  };
  return e;
}

SchemeEntry compiled_entry(bool const_ts) {
  SchemeEntry e;
  e.name = const_ts ? "compiled:spanning-tree:ts-cert-const"
                    : "compiled:spanning-tree:ts-cert-logn";
  e.predicate = spanning_tree_predicate;
  e.metadata = [const_ts](const Configuration& cfg) {
    std::map<std::string, std::string> meta;
    std::size_t n = cfg.graph.node_count();
    if (const_ts) {
      meta["radius"] = std::to_string(ts_cert_const_radius(1, n));
      meta["eps"] = "1/1";
    } else {
      meta["radius"] = std::to_string(3 * (32 * log2_ceil(n)) + 2);
      meta["eps"] = "1/2";
    }
    meta["base"] = "spanning-tree";
    meta["ts"] = const_ts ? "ts-cert-const" : "ts-cert-logn";
    meta["solver"] = "scheme_hook";
    return meta;
  };
  e.make = [const_ts](const Configuration& cfg, std::uint64_t) {
    Scheme base = make_spanning_tree_pls();
    Scheme ts = const_ts ? make_ts_cert_const(1, cfg.graph.node_count())
                         : make_ts_cert_logn(32 * log2_ceil(cfg.graph.node_count()),
                                             Rational(1, 2));
    return compile_tradeoff(base, ts, ExtensionSolver::hook());
  };
  e.instantiate = [](const Graph& g, std::uint64_t seed) {
    return spanning_tree_instance(g, seed);
  };
  e.gen_valid = [const_ts, e_inst = e.instantiate](std::uint64_t seed) {
    Graph g = const_ts ? random_graph_for(seed, 32, 64) : random_graph_for(seed, 16, 40);
    return e_inst(g, derive_seed(seed, 8));
  };
  e.gen_invalid = spanning_tree_entry().gen_invalid;
  e.nearby_honest = [const_ts](const Configuration& cfg,
                               std::uint64_t seed) -> std::optional<Labeling> {
    Configuration valid = spanning_tree_instance(cfg.graph, derive_seed(seed, 9));
    Scheme base = make_spanning_tree_pls();
    Scheme ts = const_ts ? make_ts_cert_const(1, cfg.graph.node_count())
                         : make_ts_cert_logn(32 * log2_ceil(cfg.graph.node_count()),
                                             Rational(1, 2));
    return compile_tradeoff(base, ts, ExtensionSolver::hook()).prover(valid);
  };
  return e;
}

const std::map<std::string, SchemeEntry>& registry() {
  static const std::map<std::string, SchemeEntry> entries = [] {
    std::map<std::string, SchemeEntry> m;
    for (SchemeEntry e : {spanning_tree_entry(), string_share_entry(), equality_entry(),
                          ts_logn_entry(), ts_const_entry(), compiled_entry(false),
                          compiled_entry(true)})
      m[e.name] = e;
    return m;
  }();
  return entries;
}

}  // namespace

std::vector<std::string> registry_names() {
  std::vector<std::string> names;
  for (const auto& [name, entry] : registry()) names.push_back(name);
  return names;
}

const SchemeEntry& registry_get(const std::string& name) {
  auto it = registry().find(name);
  if (it == registry().end()) throw SchemeError("unknown scheme '" + name + "'");
  return it->second;
}

}  // namespace pls
