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

#include "edgeqaoa/evolution.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <utility>

#include <fmt/format.h>

namespace edgeqaoa {

StateVector::StateVector(std::vector<Amplitude> amplitudes) : amps_(std::move(amplitudes)) {}

StateVector StateVector::uniform(int qubits) {
  if (qubits < 0 || qubits > 40) throw std::invalid_argument("StateVector: bad qubit count");
  const std::size_t dim = std::size_t{1} << qubits;
  return StateVector(std::vector<Amplitude>(dim, Amplitude(1.0 / std::sqrt(static_cast<double>(dim)), 0.0)));
}

StateVector StateVector::basis(int qubits, uint64_t index) {
  if (qubits < 0 || qubits > 40) throw std::invalid_argument("StateVector: bad qubit count");
  std::vector<Amplitude> amps(std::size_t{1} << qubits);
  if (index >= amps.size()) throw std::invalid_argument("StateVector: basis index out of range");
  amps[index] = 1.0;
  return StateVector(std::move(amps));
}

double StateVector::norm() const {
  double sum = 0.0;
  for (const Amplitude& a : amps_) sum += std::norm(a);
  return std::sqrt(sum);
}

void apply_phase(const CostDiagonal& diag, double gamma, StateVector& psi) {
  if (diag.size() != psi.size()) {
    throw std::invalid_argument(fmt::format("apply_phase: diagonal has {} entries, state has {}",
                                            diag.size(), psi.size()));
  }
  if (gamma == 0.0) return;
  auto amps = psi.amplitudes();
  for (std::size_t x = 0; x < amps.size(); ++x) {
    const double angle = -gamma * diag.values[x];
    amps[x] *= Amplitude(std::cos(angle), std::sin(angle));
  }
}

std::vector<double> bessel_j_sequence(int n_max, double x) {
  if (n_max < 0) throw std::invalid_argument("bessel_j: order must be non-negative");
  if (!std::isfinite(x)) throw std::invalid_argument("bessel_j: argument must be finite");
  std::vector<double> out(static_cast<std::size_t>(n_max) + 1, 0.0);
  const double ax = std::abs(x);
  if (ax == 0.0) {
    out[0] = 1.0;
    return out;
  }
  if (ax < 1e-8) {
    // Two-term power series; the next term is O(x^4) relative.
    const double half = 0.5 * ax;
    double lead = 1.0;
    for (int n = 0; n <= n_max; ++n) {
      if (n > 0) lead *= half / n;
      out[n] = lead * (1.0 - half * half / (n + 1));
      if (lead == 0.0) break;
    }
  } else {
    // Start far enough above both n_max and the turning point n ~ |x| that
    // the truncated tail is below double precision.
    int start = std::max(n_max, static_cast<int>(std::ceil(ax))) + 20 +
                static_cast<int>(std::ceil(15.0 * std::cbrt(ax)));
    if (start % 2 != 0) ++start;
    // Extended precision keeps the absolute rounding error of the recurrence
    // well below double epsilon, so small oscillatory values stay accurate
    // in relative terms.
    using Wide = long double;
    const Wide wx = static_cast<Wide>(ax);
    std::vector<Wide> j(static_cast<std::size_t>(start) + 2, 0.0L);
    j[start] = 1.0L;
    constexpr Wide kBig = 1e250L;
    for (int k = start; k >= 1; --k) {
      j[k - 1] = (2.0L * k / wx) * j[k] - j[k + 1];
      if (std::fabs(j[k - 1]) > kBig) {
        for (int i = k - 1; i <= start; ++i) j[i] /= kBig;
      }
    }
    Wide norm = j[0];
    for (int k = 2; k <= start; k += 2) norm += 2.0L * j[k];
    for (int n = 0; n <= n_max; ++n) out[n] = static_cast<double>(j[n] / norm);
  }
  if (x < 0) {
    for (int n = 1; n <= n_max; n += 2) out[n] = -out[n];
  }
  return out;
}

double bessel_j(int n, double x) { return bessel_j_sequence(n, x).back(); }

int expm_action(const MixerMatrix& m, double beta, StateVector& psi, ChebyshevWorkspace& work) {
  if (!std::isfinite(beta)) throw std::invalid_argument("expm_action: beta must be finite");
  const std::size_t dim = m.dimension();
  if (psi.size() != dim) {
    throw std::invalid_argument(fmt::format("expm_action: matrix dimension {} but state has {}",
                                            dim, psi.size()));
  }
  if (beta == 0.0) return 0;

  // exp(-i beta M) = exp(-i beta c) exp(-i x Mt), Mt = (M - c) / h,
  // with c the spectral midpoint and h the half-width.
  const EigenBounds bounds = eigen_bounds(m);
  const double center = 0.5 * (bounds.max + bounds.min);
  const double half_width = 0.5 * (bounds.max - bounds.min);
  const double x = beta * half_width;
  const int ceiling = static_cast<int>(std::ceil(std::abs(x))) + kChebyshevTermSlack;

  std::vector<double> bessel;
  auto coefficient_table = [&](int n) -> const std::vector<double>& {
    if (n >= static_cast<int>(bessel.size())) {
      int grow = std::max(n, static_cast<int>(std::ceil(std::abs(x))) + 60 +
                                 static_cast<int>(std::ceil(20.0 * std::cbrt(std::abs(x)))));
      bessel = bessel_j_sequence(std::min(grow, ceiling), x);
    }
    return bessel;
  };

  work.prev.assign(psi.amplitudes().begin(), psi.amplitudes().end());
  work.curr.resize(dim);
  work.next.resize(dim);
  work.sum.resize(dim);

  const double inv_h = 1.0 / half_width;
  // Mt v = (M v - c v) / h, written into `out`.
  auto apply_scaled = [&](const std::vector<Amplitude>& in, std::vector<Amplitude>& out, double factor) {
    m.multiply(in, out, factor * inv_h);
    if (center != 0.0) {
      const double shift = factor * center * inv_h;
      for (std::size_t i = 0; i < dim; ++i) out[i] -= shift * in[i];
    }
  };

  const double j0 = coefficient_table(0)[0];
  for (std::size_t i = 0; i < dim; ++i) work.sum[i] = j0 * work.prev[i];
  int terms = 1;

  // (-i)^n cycles through 1, -i, -1, i.
  static constexpr Amplitude kPowers[4] = {{1, 0}, {0, -1}, {-1, 0}, {0, 1}};
  for (int n = 1;; ++n) {
    if (n >= ceiling) {
      throw std::runtime_error(fmt::format("expm_action: no convergence after {} terms", n));
    }
    const double jn = coefficient_table(n)[n];
    if (n > std::abs(x) && std::abs(2.0 * jn) <= kChebyshevEpsilon) break;
    if (n == 1) {
      apply_scaled(work.prev, work.curr, 1.0);
    } else {
      apply_scaled(work.curr, work.next, 2.0);
      for (std::size_t i = 0; i < dim; ++i) work.next[i] -= work.prev[i];
      std::swap(work.prev, work.curr);
      std::swap(work.curr, work.next);
    }
    const Amplitude c = 2.0 * jn * kPowers[n % 4];
    for (std::size_t i = 0; i < dim; ++i) work.sum[i] += c * work.curr[i];
    ++terms;
  }

  auto out = psi.amplitudes();
  const Amplitude prefactor = std::exp(Amplitude(0.0, -beta * center));
  for (std::size_t i = 0; i < dim; ++i) out[i] = prefactor * work.sum[i];
  return terms;
}

int expm_action(const MixerMatrix& m, double beta, StateVector& psi) {
  ChebyshevWorkspace work;
  return expm_action(m, beta, psi, work);
}

}  // namespace edgeqaoa
