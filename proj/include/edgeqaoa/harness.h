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

#ifndef EDGEQAOA_HARNESS_H_
#define EDGEQAOA_HARNESS_H_

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "edgeqaoa/config.h"
#include "edgeqaoa/optimize.h"
#include "edgeqaoa/qaoa.h"

namespace edgeqaoa {

struct TrialTimings {
  double build_cost_seconds = 0.0;
  double build_mixer_seconds = 0.0;
  double evolve_mean_seconds = 0.0;  // per objective evaluation
  double phase_seconds = 0.0;        // summed over the trial
  double mixer_seconds = 0.0;        // summed over the trial
  double total_seconds = 0.0;
};

struct TrialRecord {
  uint64_t row = 0;    // position in the output, 0-based
  uint64_t trial = 0;  // graph pair index; rows sharing it share graphs
  int depth = 1;
  Method method = Method::kNelderMead;
  Deformation deformation = Deformation::kIsomorphism;
  uint64_t graph_seed = 0;
  uint64_t deform_seed = 0;
  uint64_t max_evaluations = 0;

  std::size_t optimum = 0;
  double initial_expectation = 0.0;
  double final_expectation = 0.0;
  std::vector<double> best_parameters;
  Termination termination = Termination::kBudget;
  Metrics metrics;
  TrialTimings timings;
  std::string error;  // empty on success
};

/// Runs every (trial, depth, method) combination. Rows come back in a fixed
/// order whatever the thread count, and every random draw is keyed by
/// (master seed, trial), so reruns reproduce the same numbers.
std::vector<TrialRecord> run_trials(const ExperimentConfig& cfg);

/// Main results table: config, seeds, metrics, termination. Contains no
/// wall-clock data, so equal configs give byte-identical files.
void write_results_csv(const ExperimentConfig& cfg, std::span<const TrialRecord> records,
                       std::ostream& out);

/// Per-row phase timings, keyed by row and trial.
void write_timing_csv(std::span<const TrialRecord> records, std::ostream& out);

/// Timing file written next to the results: "<path>.timing.csv".
std::string timing_path_for(const std::string& results_path);

/// run_trials plus both CSV files. Uses cfg.output_path; throws ConfigError
/// if it is empty or cannot be opened.
std::vector<TrialRecord> run_experiment(const ExperimentConfig& cfg);

// ---------------------------------------------------------------------------
// Distribution planning. These model a multi-process split of the state
// vector; nothing here executes across processes.

struct Chunk {
  uint64_t offset = 0;
  uint64_t length = 0;
};

/// P - 1 chunks of floor(2^q / P) followed by one that also takes the
/// remainder. Throws std::invalid_argument unless 1 <= P <= 2^q.
std::vector<Chunk> state_partition(int qubits, uint64_t processors);

enum class Scheme { kColumn, kRow, kCheckerboard };
std::string_view to_string(Scheme scheme);

struct DistributionPlan {
  Scheme scheme = Scheme::kColumn;
  int qubits = 1;           // n = 2^q
  uint64_t processors = 1;  // P
  double alpha = 1e-9;      // seconds per scalar operation
  double latency = 1e-6;    // seconds per message
  double buffer = 1e9;      // message buffer length
};

/// Modelled mixer mat-vec time:
///   column:       a n ceil(n/P) + (P - 1)(l + 32 / (P b))
///   row:          a n ceil(n/P) + l ceil(log2 P) + 32 n / b
///   checkerboard: a n^2 / P^2 + l 32 n log2(P^2) / (sqrt(P^2) b)
double distribution_cost(const DistributionPlan& plan);

}  // namespace edgeqaoa

#endif  // EDGEQAOA_HARNESS_H_
