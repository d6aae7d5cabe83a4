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

#include "edgeqaoa/hamiltonian.h"

#include <algorithm>
#include <array>
#include <bit>
#include <cstring>
#include <istream>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <thread>

#include <fmt/format.h>

#include "edgeqaoa/permutation.h"

namespace edgeqaoa {

std::string_view to_string(CostMode mode) {
  return mode == CostMode::kEdgeDifference ? "edge_difference" : "alternate_penalty";
}

CostMode parse_cost_mode(std::string_view name) {
  if (name == "edge" || name == "edge_difference") return CostMode::kEdgeDifference;
  if (name == "alternate" || name == "alternate_penalty") return CostMode::kAlternatePenalty;
  throw std::invalid_argument(fmt::format("unknown cost mode '{}'", name));
}

double CostDiagonal::mean() const {
  if (values.empty()) return 0.0;
  return std::accumulate(values.begin(), values.end(), 0.0) / static_cast<double>(values.size());
}

namespace {

// Fills values[begin, end) by walking permutations in lexicographic order,
// starting from the unranked index `begin`.
void fill_range(const Graph& a, const Graph& b, CostMode mode, uint64_t begin, uint64_t end,
                std::vector<double>& values) {
  const int n = static_cast<int>(a.num_vertices());
  std::vector<std::size_t> perm = kth_permutation(n, begin).mapping();
  const double sign = mode == CostMode::kEdgeDifference ? 1.0 : -1.0;
  for (uint64_t k = begin; k < end; ++k) {
    values[k] = sign * static_cast<double>(edge_difference(a, b, std::span<const std::size_t>(perm)));
    std::next_permutation(perm.begin(), perm.end());
  }
}

}  // namespace

CostDiagonal build_cost_diagonal(const Graph& g1, const Graph& g2, CostMode mode,
                                 const CostBuildOptions& options) {
  if (g1.directed() != g2.directed()) throw std::invalid_argument("graphs differ in directedness");
  const std::size_t n = std::max(g1.num_vertices(), g2.num_vertices());
  if (n < 2) throw std::invalid_argument("cost diagonal needs at least two vertices");
  if (n > options.brute_force_cap) {
    throw std::invalid_argument(
        fmt::format("cost diagonal limited to {} vertices, got {}", options.brute_force_cap, n));
  }
  const int q = qubit_count(static_cast<int>(n));
  if (q > options.max_qubits) {
    throw std::invalid_argument(fmt::format("{} vertices need {} qubits, limit is {}", n, q,
                                            options.max_qubits));
  }
  const Graph a = g1.padded(n);
  const Graph b = g2.padded(n);
  const uint64_t feasible = factorial(static_cast<int>(n));
  const double tail = mode == CostMode::kEdgeDifference
                          ? 0.0
                          : -static_cast<double>(slot_count(n, a.directed()));

  CostDiagonal diag;
  diag.qubits = q;
  diag.mode = mode;
  diag.values.assign(uint64_t{1} << q, tail);

  const uint64_t workers = std::clamp<uint64_t>(static_cast<uint64_t>(std::max(options.threads, 1)),
                                                1, feasible);
  if (workers == 1) {
    fill_range(a, b, mode, 0, feasible, diag.values);
    return diag;
  }
  // Each worker unranks its own starting permutation; no shared state.
  std::vector<std::jthread> pool;
  const uint64_t chunk = feasible / workers;
  for (uint64_t w = 0; w < workers; ++w) {
    uint64_t begin = w * chunk;
    uint64_t end = w + 1 == workers ? feasible : begin + chunk;
    pool.emplace_back([&, begin, end] { fill_range(a, b, mode, begin, end, diag.values); });
  }
  return diag;
}

namespace {

constexpr std::array<char, 4> kCacheMagic = {'Q', 'C', 'D', '1'};

template <typename T>
void put_le(std::ostream& out, T value) {
  std::array<unsigned char, sizeof(T)> bytes;
  std::memcpy(bytes.data(), &value, sizeof(T));
  if constexpr (std::endian::native == std::endian::big) std::reverse(bytes.begin(), bytes.end());
  out.write(reinterpret_cast<const char*>(bytes.data()), sizeof(T));
}

template <typename T>
T get_le(std::istream& in) {
  std::array<unsigned char, sizeof(T)> bytes;
  if (!in.read(reinterpret_cast<char*>(bytes.data()), sizeof(T))) {
    throw std::runtime_error("cost cache: truncated stream");
  }
  if constexpr (std::endian::native == std::endian::big) std::reverse(bytes.begin(), bytes.end());
  T value;
  std::memcpy(&value, bytes.data(), sizeof(T));
  return value;
}

}  // namespace

void write_cost_cache(const CostDiagonal& diag, std::ostream& out) {
  out.write(kCacheMagic.data(), kCacheMagic.size());
  put_le<uint32_t>(out, static_cast<uint32_t>(diag.qubits));
  put_le<uint8_t>(out, static_cast<uint8_t>(diag.mode));
  for (double v : diag.values) put_le<double>(out, v);
}

CostDiagonal read_cost_cache(std::istream& in) {
  std::array<char, 4> magic{};
  if (!in.read(magic.data(), magic.size()) || magic != kCacheMagic) {
    throw std::runtime_error("cost cache: bad magic");
  }
  CostDiagonal diag;
  uint32_t q = get_le<uint32_t>(in);
  if (q > 40) throw std::runtime_error(fmt::format("cost cache: implausible qubit count {}", q));
  diag.qubits = static_cast<int>(q);
  uint8_t mode = get_le<uint8_t>(in);
  if (mode > 1) throw std::runtime_error(fmt::format("cost cache: unknown mode byte {}", mode));
  diag.mode = static_cast<CostMode>(mode);
  diag.values.resize(uint64_t{1} << q);
  for (double& v : diag.values) v = get_le<double>(in);
  return diag;
}

FeasibilityMask permutation_mask(int num_vertices) {
  return [num_vertices](uint64_t k) { return is_feasible(k, num_vertices); };
}

void MixerMatrix::multiply(std::span<const std::complex<double>> in,
                           std::span<std::complex<double>> out, double scale) const {
  const uint64_t dim = dimension();
  if (in.size() != dim || out.size() != dim) {
    throw std::invalid_argument("MixerMatrix::multiply: vector length mismatch");
  }
  for (uint64_t c = 0; c < dim; ++c) {
    std::complex<double> acc = 0.0;
    for (uint64_t k = column_pointers_[c]; k < column_pointers_[c + 1]; ++k) {
      acc += in[row_indices_[k]];
    }
    out[c] = scale * acc;
  }
}

MixerMatrix build_mixer(int qubits, const FeasibilityMask& mask, int max_qubits) {
  if (qubits < 1 || qubits > max_qubits || qubits > 31) {
    throw std::invalid_argument(fmt::format("mixer: qubit count {} outside [1, {}]", qubits,
                                            std::min(max_qubits, 31)));
  }
  MixerMatrix m;
  m.qubits_ = qubits;
  m.masked_ = static_cast<bool>(mask);
  const uint64_t dim = uint64_t{1} << qubits;
  m.column_pointers_.reserve(dim + 1);
  m.row_indices_.reserve(dim * static_cast<uint64_t>(qubits));
  m.column_pointers_.push_back(0);
  for (uint64_t col = 0; col < dim; ++col) {
    const bool col_ok = !mask || mask(col);
    for (int bit = 0; bit < qubits; ++bit) {
      // Single bit flip; a bitwise OR would not give the hypercube.
      const uint64_t row = col ^ (uint64_t{1} << bit);
      if (col_ok && (!mask || mask(row))) m.row_indices_.push_back(static_cast<uint32_t>(row));
    }
    m.column_pointers_.push_back(m.row_indices_.size());
  }
  m.values_.assign(m.row_indices_.size(), 1.0);
  return m;
}

EigenBounds eigen_bounds(const MixerMatrix& m) {
  const double q = static_cast<double>(m.qubits());
  return {-q, q};
}

}  // namespace edgeqaoa
