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

#ifndef EDGEQAOA_EVOLUTION_H_
#define EDGEQAOA_EVOLUTION_H_

#include <complex>
#include <span>
#include <vector>

#include "edgeqaoa/hamiltonian.h"

namespace edgeqaoa {

using Amplitude = std::complex<double>;

/// 2^q complex amplitudes.
class StateVector {
 public:
  StateVector() = default;
  explicit StateVector(std::vector<Amplitude> amplitudes);

  /// Equal superposition: every amplitude 1/sqrt(2^q).
  static StateVector uniform(int qubits);
  /// Computational basis state |index>.
  static StateVector basis(int qubits, uint64_t index);

  std::size_t size() const { return amps_.size(); }
  Amplitude operator[](std::size_t i) const { return amps_[i]; }
  Amplitude& operator[](std::size_t i) { return amps_[i]; }

  std::span<const Amplitude> amplitudes() const { return amps_; }
  std::span<Amplitude> amplitudes() { return amps_; }
  std::vector<Amplitude>& storage() { return amps_; }

  double norm() const;

 private:
  std::vector<Amplitude> amps_;
};

/// psi[x] <- exp(-i gamma diag[x]) psi[x].
void apply_phase(const CostDiagonal& diag, double gamma, StateVector& psi);

/// Bessel function of the first kind J_n(x), n >= 0.
double bessel_j(int n, double x);

/// J_0(x), ..., J_{n_max}(x) from one Miller downward recurrence normalised
/// with J_0 + 2 sum J_{2k} = 1. Negative x uses J_n(-x) = (-1)^n J_n(x).
std::vector<double> bessel_j_sequence(int n_max, double x);

/// Series truncation threshold on |2 J_n|.
inline constexpr double kChebyshevEpsilon = 1e-18;
/// Extra terms allowed beyond |beta q| before giving up.
inline constexpr int kChebyshevTermSlack = 1000;

/// Scratch vectors for expm_action. Reusing one across calls avoids
/// reallocating in the optimisation loop.
struct ChebyshevWorkspace {
  std::vector<Amplitude> prev;
  std::vector<Amplitude> curr;
  std::vector<Amplitude> next;
  std::vector<Amplitude> sum;
};

/// psi <- exp(-i beta M) psi by a Chebyshev series with Bessel coefficients.
///
/// M is rescaled with eigen_bounds(M) to spectrum [-1, 1]; the series runs
/// until past |beta| * half-width with |2 J_n| <= kChebyshevEpsilon. Returns
/// the number of terms summed (0 when beta == 0). Throws
/// std::invalid_argument for non-finite beta and std::runtime_error if the
/// term ceiling is hit.
int expm_action(const MixerMatrix& m, double beta, StateVector& psi, ChebyshevWorkspace& work);
int expm_action(const MixerMatrix& m, double beta, StateVector& psi);

}  // namespace edgeqaoa

#endif  // EDGEQAOA_EVOLUTION_H_
