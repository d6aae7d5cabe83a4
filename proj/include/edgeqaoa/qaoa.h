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

#ifndef EDGEQAOA_QAOA_H_
#define EDGEQAOA_QAOA_H_

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "edgeqaoa/evolution.h"
#include "edgeqaoa/hamiltonian.h"

namespace edgeqaoa {

/// Angles for p alternating layers. The NPO variant adds one trailing mixer
/// angle in `extra_beta`.
struct QaoaParams {
  std::vector<double> gammas;
  std::vector<double> betas;
  std::optional<double> extra_beta;

  int depth() const { return static_cast<int>(gammas.size()); }

  /// Flat layout used by the optimisers: [gamma_1..gamma_p, beta_1..beta_p].
  static QaoaParams from_flat(std::span<const double> flat);
  std::vector<double> flat() const;
};

StateVector initial_state(int qubits);

/// Wall-clock spent inside each kernel, summed over all evolutions.
struct KernelTimings {
  double phase_seconds = 0.0;
  double mixer_seconds = 0.0;
  uint64_t evolutions = 0;
};

/// Holds the operators and scratch space for repeated evolutions.
///
/// Not thread-safe; give each worker its own Evolver. The operators are only
/// read and may be shared.
class Evolver {
 public:
  Evolver(const CostDiagonal& diag, const MixerMatrix& mixer);

  /// Phase then mixer for layers 1..p, starting from the uniform state.
  const StateVector& evolve(const QaoaParams& params);

  /// Mixer then phase for layers 1..p, then a final mixer(extra_beta).
  const StateVector& evolve_npo(const QaoaParams& params);

  const StateVector& state() const { return state_; }
  const KernelTimings& timings() const { return timings_; }

 private:
  void check(const QaoaParams& params) const;
  void phase(double gamma);
  void mix(double beta);

  const CostDiagonal& diag_;
  const MixerMatrix& mixer_;
  StateVector state_;
  ChebyshevWorkspace work_;
  KernelTimings timings_;
};

StateVector evolve(const QaoaParams& params, const CostDiagonal& diag, const MixerMatrix& mixer);
StateVector evolve_npo(const QaoaParams& params, const CostDiagonal& diag, const MixerMatrix& mixer);

/// sum_x |psi_x|^2 diag[x].
double expectation(const StateVector& psi, const CostDiagonal& diag);

/// n i.i.d. basis-state indices drawn from |psi_x|^2 by inverse CDF.
std::vector<uint64_t> sample(const StateVector& psi, std::size_t n, uint64_t seed);

/// Total probability per distinct cost value.
std::map<double, double> cost_distribution(const StateVector& psi, const CostDiagonal& diag);

/// Maps a raw cost of the given mode to the minimisation convention
/// (alternate-penalty values are negated).
inline double as_minimization(CostMode mode, double raw) {
  return mode == CostMode::kEdgeDifference ? raw : -raw;
}

struct Metrics {
  uint64_t evaluations = 0;
  double sample_error = 0.0;
  double expectation_error = 0.0;
  double classical_comparison = 0.0;
  double expectation_improvement = 0.0;
  double infeasible_sample_fraction = 0.0;
};

/// Everything compute_metrics needs from one finished trial. Expectations
/// are raw values in the diagonal's own mode.
struct TrialOutcome {
  uint64_t evaluations = 0;
  double initial_expectation = 0.0;
  double final_expectation = 0.0;
  std::span<const uint64_t> samples;
  std::optional<std::size_t> optimum;  // brute-force minimum edge difference
  std::size_t slots = 0;
  uint64_t feasible_count = 0;  // V!
};

/// All quantities use minimisation of edge difference:
///   sample_error            best feasible sampled cost - optimum (lower is
///                           better; slots - optimum if nothing feasible was
///                           sampled)
///   expectation_error       |F_final - optimum| / slots
///   classical_comparison    F_final - mean(diag)
///   expectation_improvement F_initial - F_final
/// Throws std::invalid_argument if the optimum is missing.
Metrics compute_metrics(const TrialOutcome& outcome, const CostDiagonal& diag);

}  // namespace edgeqaoa

#endif  // EDGEQAOA_QAOA_H_
