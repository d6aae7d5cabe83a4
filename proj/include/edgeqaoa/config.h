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

#ifndef EDGEQAOA_CONFIG_H_
#define EDGEQAOA_CONFIG_H_

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "edgeqaoa/graph.h"
#include "edgeqaoa/hamiltonian.h"
#include "edgeqaoa/optimize.h"

namespace edgeqaoa {

/// Thrown for anything wrong with user-supplied configuration. The CLI maps it
/// to exit code 1.
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct ExperimentConfig {
  int graph_size = 4;
  bool directed = true;
  std::vector<Deformation> deformations = {Deformation::kIsomorphism, Deformation::kVerticalFlip,
                                           Deformation::kAddEdges, Deformation::kRemoveEdges,
                                           Deformation::kAddRemove};
  CostMode mode = CostMode::kEdgeDifference;
  std::vector<int> depths = {1};
  std::vector<Method> methods = {Method::kNelderMead};
  uint64_t budget_scaling = 200;
  std::optional<uint64_t> max_evaluations;  // overrides S * p * V
  Tolerances tolerances;
  uint64_t master_seed = 1;
  int trials = 1;
  std::optional<std::size_t> samples;  // defaults to V^2
  std::string output_path;
  int threads = 1;

  /// Throws ConfigError.
  void validate() const;

  std::size_t sample_count() const;
};

/// Sectioned key = value text:
///
///   [graph]      size, directed, deformations ("all" or a comma list)
///   [qaoa]       cost_mode, depths, samples
///   [optimizer]  methods, budget_scaling, max_evaluations, x_tol, f_tol
///   [run]        seed, trials, threads
///   [output]     path
///
/// Unknown sections or keys are errors. Throws ConfigError.
ExperimentConfig parse_config(std::istream& in);
ExperimentConfig load_config(const std::string& path);

/// Comma-separated list helpers shared with the CLI.
std::vector<int> parse_int_list(std::string_view text);
std::vector<Method> parse_method_list(std::string_view text);
std::vector<Deformation> parse_deformation_list(std::string_view text);

}  // namespace edgeqaoa

#endif  // EDGEQAOA_CONFIG_H_
