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

#ifndef EDGEQAOA_PERMUTATION_H_
#define EDGEQAOA_PERMUTATION_H_

#include <cstdint>

#include "edgeqaoa/graph.h"

namespace edgeqaoa {

/// Largest n whose factorial fits in uint64_t.
inline constexpr int kMaxFactorialArg = 20;

/// n! for 0 <= n <= 20; throws std::out_of_range otherwise.
uint64_t factorial(int n);

/// Smallest q with 2^q >= V!. The compact encoding needs this many qubits.
int qubit_count(int num_vertices);

/// The k-th permutation of [0, n) in lexicographic order (factoradic decode).
/// Throws std::out_of_range when k >= n!.
Permutation kth_permutation(int n, uint64_t k);

/// True iff k < V!, i.e. the bit-string encodes an actual permutation.
bool is_feasible(uint64_t k, int num_vertices);

struct TailStats {
  uint64_t tail_count = 0;          // 2^q - V!
  double tail_over_feasible = 0.0;  // tail_count / V!
};

/// Unused ("tail") bit-strings of the compact encoding. Requires V >= 2.
TailStats tail_stats(int num_vertices);

}  // namespace edgeqaoa

#endif  // EDGEQAOA_PERMUTATION_H_
