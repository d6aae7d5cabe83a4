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

#include "edgeqaoa/qaoa.h"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <stdexcept>

#include <fmt/format.h>

#include "edgeqaoa/rng.h"

namespace edgeqaoa {

QaoaParams QaoaParams::from_flat(std::span<const double> flat) {
  if (flat.empty() || flat.size() % 2 != 0) {
    throw std::invalid_argument("QaoaParams: flat vector must hold 2p values");
  }
  const std::size_t p = flat.size() / 2;
  QaoaParams params;
  params.gammas.assign(flat.begin(), flat.begin() + static_cast<std::ptrdiff_t>(p));
  params.betas.assign(flat.begin() + static_cast<std::ptrdiff_t>(p), flat.end());
  return params;
}

std::vector<double> QaoaParams::flat() const {
  std::vector<double> out = gammas;
  out.insert(out.end(), betas.begin(), betas.end());
  return out;
}

StateVector initial_state(int qubits) {
  if (qubits < 1) throw std::invalid_argument("initial_state: need at least one qubit");
  return StateVector::uniform(qubits);
}

Evolver::Evolver(const CostDiagonal& diag, const MixerMatrix& mixer)
    : diag_(diag), mixer_(mixer) {
  if (diag.size() != mixer.dimension()) {
    throw std::invalid_argument(fmt::format("Evolver: diagonal has {} entries, mixer dimension {}",
                                            diag.size(), mixer.dimension()));
  }
}

void Evolver::check(const QaoaParams& params) const {
  if (params.gammas.size() != params.betas.size() || params.gammas.empty()) {
    throw std::invalid_argument(fmt::format("QaoaParams: need p >= 1 gammas and betas, got {} and {}",
                                            params.gammas.size(), params.betas.size()));
  }
}

namespace {
using Clock = std::chrono::steady_clock;
double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}
}  // namespace

void Evolver::phase(double gamma) {
  auto start = Clock::now();
  apply_phase(diag_, gamma, state_);
  timings_.phase_seconds += seconds_since(start);
}

void Evolver::mix(double beta) {
  auto start = Clock::now();
  expm_action(mixer_, beta, state_, work_);
  timings_.mixer_seconds += seconds_since(start);
}

const StateVector& Evolver::evolve(const QaoaParams& params) {
  check(params);
  state_ = initial_state(mixer_.qubits());
  for (int layer = 0; layer < params.depth(); ++layer) {
    phase(params.gammas[layer]);
    mix(params.betas[layer]);
  }
  ++timings_.evolutions;
  return state_;
}

const StateVector& Evolver::evolve_npo(const QaoaParams& params) {
  check(params);
  if (!params.extra_beta) throw std::invalid_argument("evolve_npo: extra_beta is required");
  state_ = initial_state(mixer_.qubits());
  for (int layer = 0; layer < params.depth(); ++layer) {
    mix(params.betas[layer]);
    phase(params.gammas[layer]);
  }
  mix(*params.extra_beta);
  ++timings_.evolutions;
  return state_;
}

StateVector evolve(const QaoaParams& params, const CostDiagonal& diag, const MixerMatrix& mixer) {
  Evolver evolver(diag, mixer);
  return evolver.evolve(params);
}

StateVector evolve_npo(const QaoaParams& params, const CostDiagonal& diag, const MixerMatrix& mixer) {
  Evolver evolver(diag, mixer);
  return evolver.evolve_npo(params);
}

namespace {
void check_lengths(const StateVector& psi, const CostDiagonal& diag, const char* what) {
  if (psi.size() != diag.size()) {
    throw std::invalid_argument(fmt::format("{}: state has {} entries, diagonal has {}", what,
                                            psi.size(), diag.size()));
  }
}
}  // namespace

double expectation(const StateVector& psi, const CostDiagonal& diag) {
  check_lengths(psi, diag, "expectation");
  double sum = 0.0;
  for (std::size_t x = 0; x < psi.size(); ++x) sum += std::norm(psi[x]) * diag.values[x];
  return sum;
}

std::vector<uint64_t> sample(const StateVector& psi, std::size_t n, uint64_t seed) {
  if (n == 0) throw std::invalid_argument("sample: need at least one sample");
  std::vector<double> cdf(psi.size());
  double running = 0.0;
  for (std::size_t x = 0; x < psi.size(); ++x) {
    running += std::norm(psi[x]);
    cdf[x] = running;
  }
  RandomStream rng(seed);
  std::vector<uint64_t> out;
  out.reserve(n);
  for (std::size_t s = 0; s < n; ++s) {
    // Scale by the actual total so rounding in the norm cannot push u past
    // the last bucket.
    const double u = rng.uniform() * running;
    auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
    if (it == cdf.end()) {
      // Only reachable when u rounds onto the total; take the last nonzero entry.
      it = std::lower_bound(cdf.begin(), cdf.end(), running);
    }
    out.push_back(static_cast<uint64_t>(it - cdf.begin()));
  }
  return out;
}

std::map<double, double> cost_distribution(const StateVector& psi, const CostDiagonal& diag) {
  check_lengths(psi, diag, "cost_distribution");
  std::map<double, double> out;
  for (std::size_t x = 0; x < psi.size(); ++x) {
    const double p = std::norm(psi[x]);
    if (p > 0.0) out[diag.values[x]] += p;
  }
  return out;
}

Metrics compute_metrics(const TrialOutcome& outcome, const CostDiagonal& diag) {
  if (!outcome.optimum) throw std::invalid_argument("compute_metrics: brute-force optimum missing");
  if (outcome.slots == 0) throw std::invalid_argument("compute_metrics: slot count must be positive");
  const double optimum = static_cast<double>(*outcome.optimum);
  const double slots = static_cast<double>(outcome.slots);
  const double f_initial = as_minimization(diag.mode, outcome.initial_expectation);
  const double f_final = as_minimization(diag.mode, outcome.final_expectation);
  const double random_choice = as_minimization(diag.mode, diag.mean());

  Metrics m;
  m.evaluations = outcome.evaluations;
  m.expectation_error = std::abs(f_final - optimum) / slots;
  m.classical_comparison = f_final - random_choice;
  m.expectation_improvement = f_initial - f_final;

  double best = std::numeric_limits<double>::infinity();
  std::size_t infeasible = 0;
  for (uint64_t k : outcome.samples) {
    if (k >= diag.size()) throw std::out_of_range("compute_metrics: sample index out of range");
    if (k >= outcome.feasible_count) {
      ++infeasible;
      continue;
    }
    best = std::min(best, as_minimization(diag.mode, diag.values[k]));
  }
  m.sample_error = (std::isinf(best) ? slots : best) - optimum;
  m.infeasible_sample_fraction =
      outcome.samples.empty() ? 0.0
                              : static_cast<double>(infeasible) / static_cast<double>(outcome.samples.size());
  return m;
}

}  // namespace edgeqaoa
