#pragma once

#include <string>
#include <vector>

#include "vendor_json.hpp"

#include "pls/registry.hpp"

namespace pls {

// Exit code contract: 0 = pass, 1 = suite failure, 2 = budget/parse error.
inline constexpr int kExitPass = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitError = 2;

struct CommandResult {
  int exit_code = kExitPass;
  nlohmann::json report;
};

/// Generate a graph and write it in the text format.
CommandResult cmd_gen(const std::string& kind, const std::vector<std::uint64_t>& params,
                      std::uint64_t seed, const std::string& out_path);

/// Run one partition construction (warmup | padded | algA) and emit the
/// partition file plus metrics.
CommandResult cmd_partition(const std::string& algorithm, const std::string& graph_path, int t,
                            std::uint64_t seed, double beta, int budget,
                            const std::string& out_path);

/// Drive one verification suite for a registered scheme on a graph file.
CommandResult cmd_verify(const std::string& scheme, const std::string& graph_path,
                         const std::string& mode, std::uint64_t budget, std::uint64_t seed,
                         std::size_t trials, int max_bits);

/// Cost-vs-t sweep of the compiled scheme; returns the CSV text in
/// report["csv"] and writes it to out_path when non-empty.
CommandResult cmd_tradeoff_curve(const std::string& base_scheme, const std::string& graph_path,
                                 const std::vector<int>& t_list, std::uint64_t seed,
                                 const std::string& out_path);

}  // namespace pls
