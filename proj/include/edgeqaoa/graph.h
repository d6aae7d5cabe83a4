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

#ifndef EDGEQAOA_GRAPH_H_
#define EDGEQAOA_GRAPH_H_

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace edgeqaoa {

/// A bijection of {0, ..., n-1}. Construction validates bijectivity.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<std::size_t> mapping);

  static Permutation identity(std::size_t n);

  std::size_t size() const { return mapping_.size(); }
  std::size_t operator[](std::size_t i) const { return mapping_[i]; }
  const std::vector<std::size_t>& mapping() const { return mapping_; }

  Permutation inverse() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<std::size_t> mapping_;
};

/// Unweighted graph stored as a dense V x V adjacency matrix.
///
/// Undirected graphs keep the matrix symmetric and never carry self-edges;
/// directed graphs may have self-edges.
class Graph {
 public:
  Graph() = default;
  Graph(std::size_t num_vertices, bool directed);

  std::size_t num_vertices() const { return n_; }
  bool directed() const { return directed_; }

  bool edge(std::size_t i, std::size_t j) const { return adj_[i * n_ + j] != 0; }

  /// Sets or clears i->j. For undirected graphs also sets j->i, and i == j
  /// throws std::invalid_argument.
  void set_edge(std::size_t i, std::size_t j, bool present = true);

  /// Number of present edge slots (unordered pairs when undirected).
  std::size_t edge_count() const;

  /// Admissible edge slots: V^2 when directed, V(V-1)/2 when undirected.
  std::size_t slot_count() const;

  /// Copy with extra isolated vertices appended so the result has `size`
  /// vertices. `size` must be >= num_vertices().
  Graph padded(std::size_t size) const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::size_t n_ = 0;
  bool directed_ = false;
  std::vector<uint8_t> adj_;
};

/// Admissible slot count for a graph shape.
std::size_t slot_count(std::size_t num_vertices, bool directed);

/// Text form: "V directed|undirected" then V rows of V '0'/'1' characters.
/// Throws std::invalid_argument on malformed input.
Graph parse_graph(std::istream& in);
Graph parse_graph(std::string_view text);
std::string format_graph(const Graph& g);

/// Each admissible slot is set independently with probability 1/2.
Graph erdos_renyi(std::size_t num_vertices, bool directed, uint64_t seed);

enum class Deformation { kIsomorphism, kVerticalFlip, kAddEdges, kRemoveEdges, kAddRemove };

std::string_view to_string(Deformation kind);
/// Accepts the names produced by to_string. Throws std::invalid_argument.
Deformation parse_deformation(std::string_view name);

/// Produces a test partner for `g`. Edge additions/removals touch V slots, or
/// every available slot when fewer than V are available.
Graph deform(const Graph& g, Deformation kind, uint64_t seed);

/// Number of admissible slots (i, j) with g1(i, j) != g2(perm(i), perm(j)).
/// Throws std::invalid_argument on shape mismatch.
std::size_t edge_difference(const Graph& g1, const Graph& g2, const Permutation& perm);

/// Same count for a raw mapping; only lengths are checked, so `perm` must
/// already be a bijection.
std::size_t edge_difference(const Graph& g1, const Graph& g2, std::span<const std::size_t> perm);

inline constexpr std::size_t kDefaultBruteForceCap = 10;

struct Alignment {
  Permutation permutation;
  uint64_t index = 0;  // lexicographic rank of `permutation`
  std::size_t difference = 0;
};

/// Exhaustive minimum of edge_difference over all V! relabelings. The smaller
/// graph is padded with isolated vertices first. Ties keep the lowest
/// lexicographic index. Throws std::invalid_argument above `cap` vertices or
/// on directedness mismatch.
Alignment brute_force_best(const Graph& g1, const Graph& g2,
                           std::size_t cap = kDefaultBruteForceCap);

/// 1 - d_min / slots, in [0, 1]. Defined as 1 when there are no slots.
double similarity(const Graph& g1, const Graph& g2,
                  std::size_t cap = kDefaultBruteForceCap);

}  // namespace edgeqaoa

#endif  // EDGEQAOA_GRAPH_H_
