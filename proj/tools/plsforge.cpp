#include <cstdlib>
#include <iostream>

#include "CLI11.hpp"

#include "pls/harness.hpp"

namespace {

std::uint64_t default_seed() {
  if (const char* env = std::getenv("PLSFORGE_SEED")) {
    try {
      return std::stoull(env);
    } catch (...) {
      std::cerr << "warning: ignoring malformed PLSFORGE_SEED\n";
    }
  }
  return 0;
}

int emit(const pls::CommandResult& result) {
  std::cout << result.report.dump(2) << "\n";
  return result.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"plsforge: two-separated partitions and proof labeling schemes"};
  app.require_subcommand(1);
  std::uint64_t seed = default_seed();
  app.add_option("--seed", seed, "master seed (default $PLSFORGE_SEED or 0)");

  // gen <kind> <params...>
  auto* gen = app.add_subcommand("gen", "generate a graph file");
  std::string gen_kind;
  std::vector<std::uint64_t> gen_params;
  std::string gen_out = "graph.txt";
  gen->add_option("kind", gen_kind,
                  "path | cycle | grid | random_connected | random_tree | layered")
      ->required();
  gen->add_option("params", gen_params, "size parameters of the kind");
  gen->add_option("--out", gen_out, "output path");

  // partition
  auto* part = app.add_subcommand("partition", "construct a two-separated partition");
  std::string part_alg, part_graph, part_out;
  int part_t = 2;
  double part_beta = 0.0;
  int part_budget = -1;
  part->add_option("algorithm", part_alg, "warmup | padded | algA")->required();
  part->add_option("--graph", part_graph, "graph file")->required();
  part->add_option("--t", part_t, "radius / diameter parameter");
  part->add_option("--beta", part_beta, "padded sampler concentration (default ln n)");
  part->add_option("--budget", part_budget, "resamples per step / seed tries");
  part->add_option("--out", part_out, "partition output path");

  // verify
  auto* verify = app.add_subcommand("verify", "run a scheme verification suite");
  std::string v_scheme, v_graph, v_mode = "completeness";
  std::uint64_t v_budget = std::uint64_t(1) << 24;
  std::size_t v_trials = 5;
  int v_max_bits = 3;
  verify->add_option("--scheme", v_scheme, "registered scheme name")->required();
  verify->add_option("--graph", v_graph, "graph file")->required();
  verify->add_option("--mode", v_mode, "completeness | sound-exhaustive | sound-fuzz");
  verify->add_option("--budget", v_budget, "enumeration budget");
  verify->add_option("--trials", v_trials, "configurations / fuzz trials");
  verify->add_option("--max-bits", v_max_bits, "label bound for exhaustive mode");

  // tradeoff-curve
  auto* curve = app.add_subcommand("tradeoff-curve", "cost-vs-t sweep of the compiled scheme");
  std::string c_base = "spanning-tree", c_graph, c_out;
  std::vector<int> c_ts;
  curve->add_option("--base", c_base, "base 1-round scheme");
  curve->add_option("--graph", c_graph, "graph file")->required();
  curve->add_option("--t-list", c_ts, "t values")->delimiter(',');
  curve->add_option("--out", c_out, "CSV output path");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*gen) return emit(pls::cmd_gen(gen_kind, gen_params, seed, gen_out));
    if (*part)
      return emit(pls::cmd_partition(part_alg, part_graph, part_t, seed, part_beta, part_budget,
                                     part_out));
    if (*verify)
      return emit(pls::cmd_verify(v_scheme, v_graph, v_mode, v_budget, seed, v_trials,
                                  v_max_bits));
    if (*curve) return emit(pls::cmd_tradeoff_curve(c_base, c_graph, c_ts, seed, c_out));
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return pls::kExitError;
  }
  return pls::kExitError;
}
