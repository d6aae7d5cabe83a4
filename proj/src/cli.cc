// Copyright 2026 The edgeqaoa Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "edgeqaoa/cli.h"

#include <fstream>
#include <optional>
#include <ostream>
#include <string>

#include <CLI11.hpp>
#include <fmt/format.h>
#include <fmt/ostream.h>

#include "edgeqaoa/config.h"
#include "edgeqaoa/graph.h"
#include "edgeqaoa/harness.h"
#include "edgeqaoa/permutation.h"

namespace edgeqaoa {

namespace {

struct RunArgs {
  std::string config;
  std::string out;
  std::optional<int> threads;
  std::string methods;
  std::optional<uint64_t> seed;
  std::string depths;
  std::optional<int> graph_size;
  std::string mode;
  std::optional<std::size_t> samples;
  std::optional<int> trials;
};

int do_run(const RunArgs& args, std::ostream& out, std::ostream& err) {
  ExperimentConfig cfg = args.config.empty() ? ExperimentConfig{} : load_config(args.config);
  if (!args.out.empty()) cfg.output_path = args.out;
  if (args.threads) cfg.threads = *args.threads;
  if (!args.methods.empty()) cfg.methods = parse_method_list(args.methods);
  if (args.seed) cfg.master_seed = *args.seed;
  if (!args.depths.empty()) cfg.depths = parse_int_list(args.depths);
  if (args.graph_size) cfg.graph_size = *args.graph_size;
  if (!args.mode.empty()) {
    try {
      cfg.mode = parse_cost_mode(args.mode);
    } catch (const std::invalid_argument& e) {
      throw ConfigError(e.what());
    }
  }
  if (args.samples) cfg.samples = *args.samples;
  if (args.trials) cfg.trials = *args.trials;
  cfg.validate();

  std::vector<TrialRecord> records;
  if (cfg.output_path.empty()) {
    records = run_trials(cfg);
    write_results_csv(cfg, records, out);
  } else {
    records = run_experiment(cfg);
  }
  std::size_t failed = 0;
  for (const auto& r : records) failed += r.error.empty() ? 0 : 1;
  fmt::print(err, "{} rows written, {} with errors\n", records.size(), failed);
  return kExitOk;
}

Graph read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError(fmt::format("cannot open graph file '{}'", path));
  return parse_graph(in);
}

int do_oracle(const std::string& a_path, const std::string& b_path, std::size_t cap, std::ostream& out) {
  const Graph a = read_graph_file(a_path);
  const Graph b = read_graph_file(b_path);
  const Alignment best = brute_force_best(a, b, cap);
  const std::size_t slots = slot_count(std::max(a.num_vertices(), b.num_vertices()), a.directed());
  const double sim = slots == 0 ? 1.0 : 1.0 - static_cast<double>(best.difference) / static_cast<double>(slots);
  fmt::print(out, "similarity {:.17g}\n", sim);
  fmt::print(out, "difference {}\n", best.difference);
  fmt::print(out, "slots {}\n", slots);
  fmt::print(out, "permutation {}\n", fmt::join(best.permutation.mapping(), " "));
  return kExitOk;
}

int do_tail(int min_v, int max_v, std::ostream& out) {
  if (min_v < 2 || max_v < min_v || max_v > kMaxFactorialArg) {
    throw ConfigError(fmt::format("tail: need 2 <= min-v <= max-v <= {}", kMaxFactorialArg));
  }
  fmt::print(out, "{:>3} {:>20} {:>3} {:>20} {:>20} {:>12}\n", "V", "V!", "q", "2^q", "2^q-V!", "tail/V!");
  for (int v = min_v; v <= max_v; ++v) {
    const int q = qubit_count(v);
    const TailStats s = tail_stats(v);
    fmt::print(out, "{:>3} {:>20} {:>3} {:>20} {:>20} {:>12.6f}\n", v, factorial(v), q, uint64_t{1} << q,
               s.tail_count, s.tail_over_feasible);
  }
  return kExitOk;
}

int do_plan(int qubits, const std::string& processors, double alpha, double latency, double buffer,
            std::ostream& out) {
  fmt::print(out, "{:>6} {:>14} {:>14} {:>14} {:>12} {:>12}\n", "P", "column", "row", "checkerboard",
             "chunk", "last_chunk");
  for (int p : parse_int_list(processors)) {
    if (p < 1) throw ConfigError("plan: processor counts must be positive");
    const auto chunks = state_partition(qubits, static_cast<uint64_t>(p));
    DistributionPlan plan{Scheme::kColumn, qubits, static_cast<uint64_t>(p), alpha, latency, buffer};
    const double column = distribution_cost(plan);
    plan.scheme = Scheme::kRow;
    const double row = distribution_cost(plan);
    plan.scheme = Scheme::kCheckerboard;
    const double checker = distribution_cost(plan);
    fmt::print(out, "{:>6} {:>14.6e} {:>14.6e} {:>14.6e} {:>12} {:>12}\n", p, column, row, checker,
               chunks.front().length, chunks.back().length);
  }
  return kExitOk;
}

}  // namespace

int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"QAOA simulator for whole-graph edge-overlap similarity"};
  app.require_subcommand(1);

  RunArgs run;
  auto* run_cmd = app.add_subcommand("run", "Run a seeded experiment and write CSV results");
  run_cmd->add_option("--config", run.config, "Experiment config file");
  run_cmd->add_option("--out", run.out, "Results CSV path (stdout if neither this nor the config sets one)");
  run_cmd->add_option("--threads", run.threads, "Worker threads");
  run_cmd->add_option("--method", run.methods, "Optimiser(s): nelder_mead, direct, random");
  run_cmd->add_option("--seed", run.seed, "Master seed");
  run_cmd->add_option("--p", run.depths, "Depth list, e.g. 1,2");
  run_cmd->add_option("--graph-size", run.graph_size, "Vertices per graph");
  run_cmd->add_option("--mode", run.mode, "Cost mode: edge | alternate");
  run_cmd->add_option("--samples", run.samples, "Final samples per trial (default V^2)");
  run_cmd->add_option("--trials", run.trials, "Graph pairs per configuration");

  std::string graph_a, graph_b;
  std::size_t cap = kDefaultBruteForceCap;
  auto* oracle_cmd = app.add_subcommand("oracle", "Brute-force edge-overlap similarity of two graph files");
  oracle_cmd->add_option("first", graph_a, "First graph file")->required();
  oracle_cmd->add_option("second", graph_b, "Second graph file")->required();
  oracle_cmd->add_option("--cap", cap, "Largest vertex count to brute-force");

  int plan_qubits = 20;
  std::string plan_processors = "1,2,4,8,16";
  double alpha = 1e-9, latency = 1e-6, buffer = 1e9;
  auto* plan_cmd = app.add_subcommand("plan", "Modelled cost of distributing the mixer mat-vec");
  plan_cmd->add_option("--qubits", plan_qubits, "State vector has 2^q entries");
  plan_cmd->add_option("--processors", plan_processors, "Processor counts, e.g. 1,2,4");
  plan_cmd->add_option("--alpha", alpha, "Seconds per scalar operation");
  plan_cmd->add_option("--latency", latency, "Seconds of latency per message");
  plan_cmd->add_option("--buffer", buffer, "Message buffer length");

  int min_v = 2, max_v = 12;
  auto* tail_cmd = app.add_subcommand("tail", "Feasible versus tail bit-strings per graph size");
  tail_cmd->add_option("--min-v", min_v, "Smallest vertex count");
  tail_cmd->add_option("--max-v", max_v, "Largest vertex count");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitValidation;
  }

  try {
    if (*run_cmd) return do_run(run, out, err);
    if (*oracle_cmd) return do_oracle(graph_a, graph_b, cap, out);
    if (*plan_cmd) return do_plan(plan_qubits, plan_processors, alpha, latency, buffer, out);
    if (*tail_cmd) return do_tail(min_v, max_v, out);
  } catch (const std::invalid_argument& e) {
    fmt::print(err, "error: {}\n", e.what());
    return kExitValidation;
  } catch (const std::out_of_range& e) {
    fmt::print(err, "error: {}\n", e.what());
    return kExitValidation;
  } catch (const std::exception& e) {
    fmt::print(err, "runtime error: {}\n", e.what());
    return kExitRuntime;
  }
  return kExitValidation;
}

}  // namespace edgeqaoa
