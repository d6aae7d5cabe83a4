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

#include "edgeqaoa/permutation.h"

#include <numeric>
#include <stdexcept>
#include <vector>

#include <fmt/format.h>

namespace edgeqaoa {

uint64_t factorial(int n) {
  if (n < 0 || n > kMaxFactorialArg) {
    throw std::out_of_range(fmt::format("factorial: {} outside [0, {}]", n, kMaxFactorialArg));
  }
  uint64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= static_cast<uint64_t>(i);
  return f;
}

int qubit_count(int num_vertices) {
  if (num_vertices < 1) throw std::out_of_range("qubit_count: need at least one vertex");
  uint64_t states = factorial(num_vertices);
  int q = 0;
  while ((uint64_t{1} << q) < states) ++q;
  return q;
}

Permutation kth_permutation(int n, uint64_t k) {
  if (k >= factorial(n)) {
    throw std::out_of_range(fmt::format("kth_permutation: index {} is not below {}!", k, n));
  }
  std::vector<std::size_t> items(static_cast<std::size_t>(n));
  std::iota(items.begin(), items.end(), std::size_t{0});
  std::vector<std::size_t> out;
  out.reserve(items.size());
  for (int remaining = n; remaining > 0; --remaining) {
    uint64_t f = factorial(remaining - 1);
    auto digit = static_cast<std::size_t>(k / f);
    k %= f;
    out.push_back(items[digit]);
    items.erase(items.begin() + static_cast<std::ptrdiff_t>(digit));
  }
  return Permutation(std::move(out));
}

bool is_feasible(uint64_t k, int num_vertices) {
  if (num_vertices > kMaxFactorialArg) return true;  // V! exceeds every uint64_t
  return k < factorial(num_vertices);
}

TailStats tail_stats(int num_vertices) {
  if (num_vertices < 2) throw std::out_of_range("tail_stats: need at least two vertices");
  uint64_t feasible = factorial(num_vertices);
  uint64_t states = uint64_t{1} << qubit_count(num_vertices);
  TailStats s;
  s.tail_count = states - feasible;
  s.tail_over_feasible = static_cast<double>(s.tail_count) / static_cast<double>(feasible);
  return s;
}

}  // namespace edgeqaoa
