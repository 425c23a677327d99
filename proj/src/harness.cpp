#include "pls/harness.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include "pls/graph_io.hpp"
#include "pls/rng.hpp"
#include "pls/schemes/spanning_tree.hpp"
#include "pls/schemes/tradeoff.hpp"
#include "pls/schemes/ts_cert.hpp"
#include "pls/search.hpp"

namespace pls {

namespace {

using nlohmann::json;

json graph_descriptor(const std::string& path, const Graph& g) {
  return json{{"path", path}, {"n", g.node_count()}, {"edges", g.edge_count()}};
}

CommandResult error_result(const std::string& msg) {
  CommandResult r;
  r.exit_code = kExitError;
  r.report = json{{"error", msg}};
  return r;
}

json verdict_report(const std::unordered_map<NodeId, Verdict>& verdicts) {
  json per_node = json::object();
  for (const auto& [v, verdict] : verdicts)
    per_node[std::to_string(v)] = verdict.accepted ? "accept" : "reject";
  return json{{"per_node", per_node}, {"all_accept", all_accept(verdicts)}};
}

}  // namespace

CommandResult cmd_gen(const std::string& kind, const std::vector<std::uint64_t>& params,
                      std::uint64_t seed, const std::string& out_path) {
  CommandResult result;
  try {
    GenParams p;
    p.values = params;
    Graph g = generate(kind, p, seed);
    Configuration cfg = Configuration::plain(std::move(g));
    write_graph_file(out_path, cfg);
    result.report = json{{"kind", kind},
                         {"params", params},
                         {"seed", seed},
                         {"out", out_path},
                         {"n", cfg.graph.node_count()},
                         {"edges", cfg.graph.edge_count()}};
  } catch (const std::exception& e) {
    return error_result(e.what());
  }
  return result;
}

CommandResult cmd_partition(const std::string& algorithm, const std::string& graph_path, int t,
                            std::uint64_t seed, double beta, int budget,
                            const std::string& out_path) {
  CommandResult result;
  try {
    Configuration cfg = read_graph_file(graph_path);
    const Graph& g = cfg.graph;
    json metrics{{"algorithm", algorithm}, {"graph", graph_descriptor(graph_path, g)},
                 {"t", t},                 {"seed", seed},
                 {"success", false}};

    TsPartition ts;
    if (algorithm == "warmup") {
      OrderedPartition p = warmup_carving(g, t);
      ts = degeneracy_to_ts(g, p);
      metrics["cluster_degeneracy"] = cluster_degeneracy(g, p).str();
      metrics["success"] = true;
    } else if (algorithm == "padded") {
      if (beta <= 0) beta = std::log(double(std::max<std::size_t>(2, g.node_count())));
      PaddedCarvingResult r = padded_carving(g, t, beta, seed, budget <= 0 ? 50 : budget);
      metrics["beta"] = beta;
      metrics["resamples_used"] = r.resamples_used;
      if (!r.success) {
        metrics["best_ratio"] = r.best_ratio.str();
        metrics["failed_step"] = r.steps;
        result.report = metrics;
        result.exit_code = kExitFail;
        return result;
      }
      ts = degeneracy_to_ts(g, r.partition);
      metrics["cluster_degeneracy"] = cluster_degeneracy(g, r.partition).str();
      metrics["success"] = true;
    } else if (algorithm == "algA") {
      int tries = budget < 0 ? 16 : budget;  // an explicit 0 forces the failure path
      auto good = tries > 0 ? find_good_seed(g, t, tries, seed)
                            : std::optional<GoodSeed>();
      if (!good) {
        metrics["alive_count"] = g.node_count();
        metrics["note"] = "no good seed within budget";
        result.report = metrics;
        result.exit_code = kExitFail;
        return result;
      }
      RadiusFunction radii(good->seed, t, g.node_count());
      CarvingResult r = randomized_carving(g, t, radii);
      if (!r.success) {
        metrics["alive_count"] = r.alive.size();
        result.report = metrics;
        result.exit_code = kExitFail;
        return result;
      }
      ts = r.partition;
      metrics["good_seed"] = good->seed;
      metrics["tries"] = good->tries;
      metrics["cluster_degeneracy"] =
          cluster_degeneracy(g, OrderedPartition{r.partition.clusters}).str();
      metrics["success"] = true;
    } else {
      return error_result("unknown partition algorithm '" + algorithm + "'");
    }

    DistOracle oracle(g);
    int max_wd = 0;
    for (const Cluster& c : ts.clusters)
      max_wd = std::max(max_wd, weak_diameter(oracle, c));
    metrics["clusters"] = ts.clusters.size();
    metrics["max_weak_diameter"] = max_wd;
    std::set<NodeId> x(ts.separating_set.begin(), ts.separating_set.end());
    Rational ratio = Rational::zero();
    for (const Cluster& c : ts.clusters) {
      std::int64_t k = 0;
      for (NodeId v : c)
        if (x.count(v)) ++k;
      Rational rr(k, std::int64_t(c.size()));
      if (ratio < rr) ratio = rr;
    }
    metrics["cost_ratio"] = ratio.str();

    if (!out_path.empty()) {
      std::ofstream os(out_path);
      if (!os) return error_result("cannot open for writing: " + out_path);
      write_partition(os, ts);
      metrics["out"] = out_path;
    }
    result.report = metrics;
  } catch (const std::exception& e) {
    return error_result(e.what());
  }
  return result;
}

CommandResult cmd_verify(const std::string& scheme_name, const std::string& graph_path,
                         const std::string& mode, std::uint64_t budget, std::uint64_t seed,
                         std::size_t trials, int max_bits) {
  CommandResult result;
  try {
    const SchemeEntry& entry = registry_get(scheme_name);
    Configuration base = read_graph_file(graph_path);
    json report{{"scheme", scheme_name},
                {"graph", graph_descriptor(graph_path, base.graph)},
                {"mode", mode},
                {"seed", seed},
                {"n", base.graph.node_count()}};

    if (entry.metadata) report["scheme_meta"] = entry.metadata(base);

    if (mode == "completeness") {
      std::size_t cost = 0;
      json failures = json::array();
      int radius = 0;
      for (std::size_t i = 0; i < trials; ++i) {
        std::uint64_t sub = derive_seed(seed, 0x76657269ULL, i);
        Configuration cfg = entry.instantiate(base.graph, sub);
        Scheme s = entry.make(cfg, sub);
        radius = s.t;
        auto rep = check_completeness(s, entry.predicate, {cfg});
        for (auto [idx, v] : rep.failures)
          failures.push_back(json{{"trial", i}, {"node", v}});
        cost = std::max(cost, scheme_cost(s, {cfg}));
        if (i + 1 == trials) report["verdicts"] = verdict_report(run_scheme(s, cfg, s.prover(cfg)));
      }
      report["t"] = radius;
      report["trials"] = trials;
      report["honest_cost_bits"] = cost;
      report["failures"] = failures;
      report["pass"] = failures.empty();
      result.report = report;
      result.exit_code = failures.empty() ? kExitPass : kExitFail;
      return result;
    }

    if (mode == "sound-exhaustive" || mode == "sound-fuzz") {
      if (!entry.gen_invalid)
        return error_result("scheme '" + scheme_name + "' has no invalid-instance generator");
      auto invalid = entry.gen_invalid(base.graph, derive_seed(seed, 0x696e76ULL));
      if (!invalid) return error_result("could not build an invalid instance on this graph");
      Scheme s = entry.make(*invalid, seed);
      report["t"] = s.t;

      if (mode == "sound-exhaustive") {
        auto rep = check_soundness_exhaustive(s, entry.predicate, *invalid, max_bits, budget);
        report["max_bits"] = max_bits;
        report["steps"] = rep.steps;
        if (rep.status == SearchStatus::budget_exceeded) {
          report["error"] = "enumeration budget exceeded";
          result.report = report;
          result.exit_code = kExitError;
          return result;
        }
        report["pass"] = rep.ok;
        result.report = report;
        result.exit_code = rep.ok ? kExitPass : kExitFail;
        return result;
      }

      FuzzOptions options;
      options.trials = trials;
      options.seed = seed;
      if (entry.nearby_honest) options.nearby_honest = entry.nearby_honest(*invalid, seed);
      auto rep = check_soundness_fuzz(s, entry.predicate, *invalid, options);
      report["trials"] = rep.trials_run;
      report["note"] = rep.note;
      report["pass"] = rep.ok;
      if (trials == 0) report["vacuous"] = "trials=0";
      result.report = report;
      result.exit_code = rep.ok ? kExitPass : kExitFail;
      return result;
    }

    return error_result("unknown mode '" + mode + "'");
  } catch (const BudgetError& e) {
    return error_result(std::string("budget: ") + e.what());
  } catch (const std::exception& e) {
    return error_result(e.what());
  }
}

CommandResult cmd_tradeoff_curve(const std::string& base_scheme, const std::string& graph_path,
                                 const std::vector<int>& t_list, std::uint64_t seed,
                                 const std::string& out_path) {
  CommandResult result;
  try {
    if (base_scheme != "spanning-tree")
      return error_result("tradeoff curve supports base scheme 'spanning-tree'");
    Configuration base = read_graph_file(graph_path);
    Configuration instance = spanning_tree_instance(base.graph, derive_seed(seed, 11));
    Scheme one = make_spanning_tree_pls();
    std::size_t p = scheme_cost(one, {instance});

    std::ostringstream csv;
    csv << "t,radius,cost_bits,ts_overhead_bits,error\n";
    json rows = json::array();
    for (int t : t_list) {
      try {
        Scheme ts = make_ts_cert_const(t, base.graph.node_count());
        Scheme compiled = compile_tradeoff(one, ts, ExtensionSolver::hook());
        Labeling labels = compiled.prover(instance);
        std::size_t cost = 0;
        for (const auto& [v, l] : labels) cost = std::max(cost, l.size());
        Labeling ts_labels = ts.prover(instance);
        std::size_t overhead = 0;
        for (const auto& [v, l] : ts_labels) overhead = std::max(overhead, l.size());
        csv << t << "," << compiled.t << "," << cost << "," << overhead << ",\n";
        rows.push_back(json{{"t", t},
                            {"radius", compiled.t},
                            {"cost_bits", cost},
                            {"ts_overhead_bits", overhead}});
      } catch (const std::exception& e) {
        csv << t << ",,,," << e.what() << "\n";
        rows.push_back(json{{"t", t}, {"error", e.what()}});
      }
    }
    if (!out_path.empty()) {
      std::ofstream os(out_path);
      if (!os) return error_result("cannot open for writing: " + out_path);
      os << csv.str();
    }
    result.report = json{{"base", base_scheme},
                         {"graph", graph_descriptor(graph_path, base.graph)},
                         {"base_cost_bits", p},
                         {"seed", seed},
                         {"rows", rows},
                         {"csv", csv.str()}};
  } catch (const std::exception& e) {
    return error_result(e.what());
  }
  return result;
}

}  // namespace pls
