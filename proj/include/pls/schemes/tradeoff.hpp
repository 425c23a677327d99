#pragma once

#include "pls/schemes/ts_cert.hpp"
#include "pls/search.hpp"

namespace pls {

/// How a compiled verifier discharges the "a good extension exists" check.
/// Exhaustive search is complete up to max_bits but exponential, so it is
/// capped and meant for micro instances; scheme_hook delegates to the base
/// scheme's extension finder, whose candidates are always re-validated.
struct ExtensionSolver {
  enum class Strategy { exhaustive, scheme_hook };
  Strategy strategy = Strategy::exhaustive;
  int max_bits = 4;
  std::uint64_t budget = std::uint64_t(1) << 22;

  static ExtensionSolver exhaustive(int max_bits, std::uint64_t budget = std::uint64_t(1) << 22) {
    return {Strategy::exhaustive, max_bits, budget};
  }
  static ExtensionSolver hook() { return {Strategy::scheme_hook, 0, 0}; }
};

/// Compile a radius-1 scheme into a larger-radius one on top of a
/// TS-certifying scheme: each cluster's separating-set labels are encoded
/// across the cluster in lex blocks, nodes surrounded by the separating set
/// run the base verifier directly, and each cluster leader (max id outside
/// the separating set) checks that the boundary labels extend to a labeling
/// its whole neighborhood region accepts. Cost is O(ceil(eps*p)) plus the
/// TS labels. Solver budget exhaustion raises BudgetError (distinct from a
/// reject verdict).
Scheme compile_tradeoff(const Scheme& one_pls, const Scheme& ts_scheme,
                        const ExtensionSolver& solver);

}  // namespace pls
