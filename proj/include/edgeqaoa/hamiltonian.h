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

#ifndef EDGEQAOA_HAMILTONIAN_H_
#define EDGEQAOA_HAMILTONIAN_H_

#include <complex>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <span>
#include <string_view>
#include <vector>

#include "edgeqaoa/graph.h"

namespace edgeqaoa {

inline constexpr int kDefaultMaxQubits = 24;

// Edge-difference costs are minimised. Alternate-penalty costs (-d, with the
// tail pinned at -slots) are maximised.
enum class CostMode : uint8_t { kEdgeDifference = 0, kAlternatePenalty = 1 };

std::string_view to_string(CostMode mode);
/// Accepts "edge", "edge_difference", "alternate", "alternate_penalty".
CostMode parse_cost_mode(std::string_view name);

/// Diagonal of the problem operator: values[k] is the cost of bit-string k.
struct CostDiagonal {
  int qubits = 0;
  CostMode mode = CostMode::kEdgeDifference;
  std::vector<double> values;

  std::size_t size() const { return values.size(); }
  double mean() const;
};

struct CostBuildOptions {
  int max_qubits = kDefaultMaxQubits;
  std::size_t brute_force_cap = kDefaultBruteForceCap;
  int threads = 1;
};

/// Evaluates edge_difference under every permutation index k < V! and fills
/// the tail [V!, 2^q) with the mode's padding value (0 or -slots).
/// Unequal graphs are padded with isolated vertices first.
CostDiagonal build_cost_diagonal(const Graph& g1, const Graph& g2, CostMode mode,
                                 const CostBuildOptions& options = {});

/// Binary cache: "QCD1", uint32 q, uint8 mode, then 2^q float64, all
/// little-endian. Throws std::runtime_error on a malformed stream.
void write_cost_cache(const CostDiagonal& diag, std::ostream& out);
CostDiagonal read_cost_cache(std::istream& in);

using FeasibilityMask = std::function<bool(uint64_t)>;

/// Mask accepting exactly the indices that encode a permutation of V vertices.
FeasibilityMask permutation_mask(int num_vertices);

/// Hypercube adjacency (sum of single-qubit X) in compressed-sparse-column
/// form. Values are all 1.
class MixerMatrix {
 public:
  MixerMatrix() = default;

  int qubits() const { return qubits_; }
  uint64_t dimension() const { return uint64_t{1} << qubits_; }
  std::size_t nonzeros() const { return row_indices_.size(); }
  bool masked() const { return masked_; }

  const std::vector<uint64_t>& column_pointers() const { return column_pointers_; }
  const std::vector<uint32_t>& row_indices() const { return row_indices_; }
  const std::vector<double>& values() const { return values_; }

  /// out = scale * M * in. The matrix is symmetric, so column c of M is also
  /// row c and every output entry is an independent gather.
  void multiply(std::span<const std::complex<double>> in, std::span<std::complex<double>> out,
                double scale = 1.0) const;

 private:
  friend MixerMatrix build_mixer(int, const FeasibilityMask&, int);

  int qubits_ = 0;
  bool masked_ = false;
  std::vector<uint64_t> column_pointers_;
  std::vector<uint32_t> row_indices_;
  std::vector<double> values_;
};

/// Entry (r, c) is present iff r and c differ in exactly one bit and, when a
/// mask is given, both pass it.
MixerMatrix build_mixer(int qubits, const FeasibilityMask& mask = {},
                        int max_qubits = kDefaultMaxQubits);

struct EigenBounds {
  double min = 0.0;
  double max = 0.0;
};

/// (-q, +q): exact for the full hypercube, an over-estimate once masked.
EigenBounds eigen_bounds(const MixerMatrix& m);

}  // namespace edgeqaoa

#endif  // EDGEQAOA_HAMILTONIAN_H_
