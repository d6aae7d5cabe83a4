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

#include "edgeqaoa/harness.h"

#include <atomic>
#include <bit>
#include <chrono>
#include <cmath>
#include <fstream>
#include <ostream>
#include <thread>

#include <fmt/format.h>

#include "edgeqaoa/permutation.h"
#include "edgeqaoa/rng.h"

namespace edgeqaoa {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

// Sub-stream ids under derive_seed(master, trial, purpose).
enum Purpose : uint64_t {
  kGraphStream = 0,
  kDeformStream = 1,
  kStartStream = 2,
  kOptimizerStream = 3,
  kSampleStream = 4,
};

struct RowSpec {
  uint64_t trial;
  int depth;
  Method method;
};

std::vector<RowSpec> enumerate_rows(const ExperimentConfig& cfg) {
  std::vector<RowSpec> rows;
  for (int t = 0; t < cfg.trials; ++t) {
    for (int p : cfg.depths) {
      for (Method m : cfg.methods) rows.push_back({static_cast<uint64_t>(t), p, m});
    }
  }
  return rows;
}

TrialRecord run_row(const ExperimentConfig& cfg, uint64_t row, const RowSpec& task) {
  const auto started = Clock::now();
  TrialRecord rec;
  rec.row = row;
  rec.trial = task.trial;
  rec.depth = task.depth;
  rec.method = task.method;
  rec.deformation = cfg.deformations[task.trial % cfg.deformations.size()];
  rec.graph_seed = derive_seed(cfg.master_seed, task.trial, kGraphStream);
  rec.deform_seed = derive_seed(cfg.master_seed, task.trial, kDeformStream);
  const OptimizerBudget budget{cfg.budget_scaling, task.depth, cfg.graph_size, cfg.max_evaluations};
  rec.max_evaluations = budget.max_evaluations();
  // Streams that depend on the row's depth and method as well as the trial.
  const uint64_t row_key = static_cast<uint64_t>(task.depth) << 8 | static_cast<uint64_t>(task.method);

  try {
    const Graph base = erdos_renyi(static_cast<std::size_t>(cfg.graph_size), cfg.directed, rec.graph_seed);
    const Graph other = deform(base, rec.deformation, rec.deform_seed);

    auto t = Clock::now();
    const CostDiagonal diag = build_cost_diagonal(base, other, cfg.mode);
    rec.timings.build_cost_seconds = seconds_since(t);
    t = Clock::now();
    const MixerMatrix mixer = build_mixer(diag.qubits);
    rec.timings.build_mixer_seconds = seconds_since(t);

    Evolver evolver(diag, mixer);
    bool first = true;
    const Objective objective = [&](std::span<const double> x) {
      const double raw = expectation(evolver.evolve(QaoaParams::from_flat(x)), diag);
      if (first) {
        rec.initial_expectation = raw;
        first = false;
      }
      return as_minimization(diag.mode, raw);
    };

    const SearchBox box = SearchBox::angles(2 * static_cast<std::size_t>(task.depth));
    RandomStream start(derive_seed(cfg.master_seed, task.trial, kStartStream), row_key);
    std::vector<double> x0(box.dims());
    for (std::size_t d = 0; d < x0.size(); ++d) {
      x0[d] = box.lower[d] + start.uniform() * (box.upper[d] - box.lower[d]);
    }

    const MinimizeResult result =
        minimize(objective, x0, box, budget, task.method, cfg.tolerances,
                 derive_seed(cfg.master_seed, task.trial, kOptimizerStream) ^ row_key);
    rec.best_parameters = result.best_x;
    rec.termination = result.reason;
    const KernelTimings kernel = evolver.timings();
    rec.timings.phase_seconds = kernel.phase_seconds;
    rec.timings.mixer_seconds = kernel.mixer_seconds;
    if (kernel.evolutions > 0) {
      rec.timings.evolve_mean_seconds =
          (kernel.phase_seconds + kernel.mixer_seconds) / static_cast<double>(kernel.evolutions);
    }

    const StateVector& final_state = evolver.evolve(QaoaParams::from_flat(result.best_x));
    rec.final_expectation = expectation(final_state, diag);
    const std::vector<uint64_t> samples =
        sample(final_state, cfg.sample_count(),
               derive_seed(derive_seed(cfg.master_seed, task.trial, kSampleStream), row_key));

    rec.optimum = brute_force_best(base, other).difference;
    TrialOutcome outcome;
    outcome.evaluations = result.evaluations;
    outcome.initial_expectation = rec.initial_expectation;
    outcome.final_expectation = rec.final_expectation;
    outcome.samples = samples;
    outcome.optimum = rec.optimum;
    outcome.slots = base.slot_count();
    outcome.feasible_count = factorial(cfg.graph_size);
    rec.metrics = compute_metrics(outcome, diag);
  } catch (const std::exception& e) {
    rec.error = e.what();
  }
  rec.timings.total_seconds = seconds_since(started);
  return rec;
}

std::string number(double v) { return fmt::format("{:.17g}", v); }

std::string csv_escape(std::string_view text) {
  std::string out = "\"";
  for (char c : text) {
    if (c == '"') {
      out += "\"\"";
    } else if (c == '\n' || c == '\r') {
      out += ' ';
    } else {
      out += c;
    }
  }
  return out + "\"";
}

}  // namespace

std::vector<TrialRecord> run_trials(const ExperimentConfig& cfg) {
  cfg.validate();
  const std::vector<RowSpec> rows = enumerate_rows(cfg);
  std::vector<TrialRecord> records(rows.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < rows.size(); i = next++) records[i] = run_row(cfg, i, rows[i]);
  };
  const std::size_t workers = std::min<std::size_t>(static_cast<std::size_t>(cfg.threads), rows.size());
  if (workers <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(worker);
  }
  return records;
}

void write_results_csv(const ExperimentConfig& cfg, std::span<const TrialRecord> records,
                       std::ostream& out) {
  out << "row,trial,graph_size,directed,deformation,cost_mode,p,method,budget_scaling,"
         "max_evaluations,x_tol,f_tol,samples,master_seed,graph_seed,deform_seed,optimum,initial_expectation,"
         "final_expectation,Number of Evaluations,Sample Error,Expectation Error,"
         "Classical Comparison,Expectation Improvement,infeasible_sample_fraction,best_parameters,"
         "termination_reason,error\n";
  for (const TrialRecord& r : records) {
    out << fmt::format("{},{},{},{},{},{},{},{},{},{},{},{},{},{},{},{},", r.row, r.trial, cfg.graph_size,
                       cfg.directed ? "true" : "false", to_string(r.deformation), to_string(cfg.mode),
                       r.depth, to_string(r.method), cfg.budget_scaling, r.max_evaluations,
                       number(cfg.tolerances.x_tol), number(cfg.tolerances.f_tol), cfg.sample_count(),
                       cfg.master_seed, r.graph_seed, r.deform_seed);
    if (!r.error.empty()) {
      out << ",,,,,,,,,,," << csv_escape(r.error) << '\n';
      continue;
    }
    std::string params;
    for (std::size_t i = 0; i < r.best_parameters.size(); ++i) {
      if (i > 0) params += ';';
      params += number(r.best_parameters[i]);
    }
    out << fmt::format("{},{},{},{},{},{},{},{},{},{},{},\n", r.optimum, number(r.initial_expectation),
                       number(r.final_expectation), r.metrics.evaluations, number(r.metrics.sample_error),
                       number(r.metrics.expectation_error), number(r.metrics.classical_comparison),
                       number(r.metrics.expectation_improvement),
                       number(r.metrics.infeasible_sample_fraction), params, to_string(r.termination));
  }
}

void write_timing_csv(std::span<const TrialRecord> records, std::ostream& out) {
  out << "row,trial,p,method,time_build_cost,time_build_mixer,time_evolve_mean,time_phase,"
         "time_mixer,time_total\n";
  for (const TrialRecord& r : records) {
    const TrialTimings& t = r.timings;
    out << fmt::format("{},{},{},{},{},{},{},{},{},{}\n", r.row, r.trial, r.depth, to_string(r.method),
                       number(t.build_cost_seconds), number(t.build_mixer_seconds),
                       number(t.evolve_mean_seconds), number(t.phase_seconds), number(t.mixer_seconds),
                       number(t.total_seconds));
  }
}

std::string timing_path_for(const std::string& results_path) { return results_path + ".timing.csv"; }

std::vector<TrialRecord> run_experiment(const ExperimentConfig& cfg) {
  if (cfg.output_path.empty()) throw ConfigError("no output path configured");
  cfg.validate();
  std::ofstream results(cfg.output_path);
  if (!results) throw ConfigError(fmt::format("cannot write '{}'", cfg.output_path));
  std::ofstream timing(timing_path_for(cfg.output_path));
  if (!timing) throw ConfigError(fmt::format("cannot write '{}'", timing_path_for(cfg.output_path)));

  std::vector<TrialRecord> records = run_trials(cfg);
  write_results_csv(cfg, records, results);
  write_timing_csv(records, timing);
  if (!results || !timing) throw std::runtime_error("failed while writing experiment output");
  return records;
}

std::vector<Chunk> state_partition(int qubits, uint64_t processors) {
  if (qubits < 0 || qubits > 62) throw std::invalid_argument("state_partition: bad qubit count");
  const uint64_t total = uint64_t{1} << qubits;
  if (processors < 1 || processors > total) {
    throw std::invalid_argument(fmt::format("state_partition: need 1 <= P <= {}, got {}", total, processors));
  }
  const uint64_t base = total / processors;
  std::vector<Chunk> chunks(processors);
  for (uint64_t i = 0; i < processors; ++i) chunks[i] = {i * base, base};
  chunks.back().length += total % processors;
  return chunks;
}

std::string_view to_string(Scheme scheme) {
  switch (scheme) {
    case Scheme::kColumn: return "column";
    case Scheme::kRow: return "row";
    case Scheme::kCheckerboard: return "checkerboard";
  }
  return "unknown";
}

double distribution_cost(const DistributionPlan& plan) {
  if (plan.processors < 1) throw std::invalid_argument("distribution_cost: need at least one processor");
  if (!(plan.alpha > 0 && plan.latency > 0 && plan.buffer > 0)) {
    throw std::invalid_argument("distribution_cost: constants must be positive");
  }
  const double n = std::ldexp(1.0, plan.qubits);
  const double p = static_cast<double>(plan.processors);
  const double ceil_log_p = static_cast<double>(std::bit_width(plan.processors - 1));
  switch (plan.scheme) {
    case Scheme::kColumn:
      return plan.alpha * n * std::ceil(n / p) + (p - 1) * (plan.latency + 32.0 / (p * plan.buffer));
    case Scheme::kRow:
      return plan.alpha * n * std::ceil(n / p) + plan.latency * ceil_log_p + 32.0 * n / plan.buffer;
    case Scheme::kCheckerboard:
      return plan.alpha * n * n / (p * p) +
             plan.latency * 32.0 * n * std::log2(p * p) / (std::sqrt(p * p) * plan.buffer);
  }
  throw std::invalid_argument("distribution_cost: unknown scheme");
}

}  // namespace edgeqaoa
