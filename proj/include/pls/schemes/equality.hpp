#pragma once

#include "pls/scheme.hpp"

namespace pls {

// The layered equality gadget: the two endpoint nodes of a (2t+3)-layer
// graph receive m^2-bit inputs, and the predicate asks that they match.
// The radius-1 scheme splits the left input into m segments relayed by the
// even layers, with labels of ceil(log2 m) + m bits. The two-player
// reduction below simulates the verifier on the left and right halves to
// turn any small-label scheme into a short nondeterministic equality
// witness.

struct EqualityGadget {
  int t = 1;
  int m = 3;
  Scheme scheme;  // radius 1
  Predicate predicate;

  Graph graph() const;
  /// Configuration with the given endpoint inputs (each exactly m^2 bits).
  Configuration make_config(const BitString& left, const BitString& right) const;
  /// Honest per-node label length: 0 on odd layers, index+segment on even.
  std::vector<int> honest_label_bits() const;
};

EqualityGadget make_equality_gadget(int t, int m);

/// Infer (t, m) of a layered graph from its structure (node count plus the
/// endpoint degree); throws if the graph is not a layered gadget graph.
std::pair<int, int> layered_params(const Graph& g);

struct CommTranscript {
  BitString alice_input;
  BitString bob_input;
  BitString witness;
  bool alice_accepts = false;
  bool bob_accepts = false;
  bool parse_failure = false;  // witness did not split into |V| labels
};

/// Two-player simulation: the witness is read as |V| labels in id order;
/// Alice evaluates the verifier on layers 1..t+1, Bob on layers
/// t+2..2t+3, each from a configuration holding only their own private
/// input. Throws std::logic_error if any simulated view would contain the
/// opposite endpoint (the layer split makes that impossible for schemes of
/// radius <= t).
CommTranscript reduce_to_eq(const Scheme& t_pls, int t, int m, const BitString& alice_input,
                            const BitString& bob_input, const BitString& witness);

/// Witness built from a labeling (labels concatenated in id order with
/// tuple framing), the honest witness being the prover's labels.
BitString witness_from_labeling(const Graph& g, const Labeling& labels);

/// Same scheme verified on radius-t views (verdicts unchanged by
/// locality); used to exercise the reduction at the graph's full radius.
Scheme widen_scheme(const Scheme& s, int t);

}  // namespace pls
