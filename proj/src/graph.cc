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

#include "edgeqaoa/graph.h"

#include <algorithm>
#include <istream>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <utility>

#include <fmt/format.h>

#include "edgeqaoa/rng.h"

namespace edgeqaoa {

Permutation::Permutation(std::vector<std::size_t> mapping) : mapping_(std::move(mapping)) {
  std::vector<bool> seen(mapping_.size(), false);
  for (std::size_t v : mapping_) {
    if (v >= mapping_.size() || seen[v]) {
      throw std::invalid_argument("Permutation: mapping is not a bijection");
    }
    seen[v] = true;
  }
}

Permutation Permutation::identity(std::size_t n) {
  std::vector<std::size_t> m(n);
  std::iota(m.begin(), m.end(), std::size_t{0});
  return Permutation(std::move(m));
}

Permutation Permutation::inverse() const {
  std::vector<std::size_t> inv(mapping_.size());
  for (std::size_t i = 0; i < mapping_.size(); ++i) inv[mapping_[i]] = i;
  return Permutation(std::move(inv));
}

Graph::Graph(std::size_t num_vertices, bool directed)
    : n_(num_vertices), directed_(directed), adj_(num_vertices * num_vertices, 0) {}

void Graph::set_edge(std::size_t i, std::size_t j, bool present) {
  if (i >= n_ || j >= n_) throw std::out_of_range("Graph::set_edge: vertex out of range");
  uint8_t bit = present ? 1 : 0;
  if (directed_) {
    adj_[i * n_ + j] = bit;
    return;
  }
  if (i == j) throw std::invalid_argument("Graph::set_edge: undirected graphs have no self-edges");
  adj_[i * n_ + j] = bit;
  adj_[j * n_ + i] = bit;
}

std::size_t Graph::edge_count() const {
  std::size_t total = static_cast<std::size_t>(std::count(adj_.begin(), adj_.end(), uint8_t{1}));
  return directed_ ? total : total / 2;
}

std::size_t Graph::slot_count() const { return edgeqaoa::slot_count(n_, directed_); }

Graph Graph::padded(std::size_t size) const {
  if (size < n_) throw std::invalid_argument("Graph::padded: cannot shrink a graph");
  Graph out(size, directed_);
  for (std::size_t i = 0; i < n_; ++i) {
    std::copy_n(adj_.begin() + i * n_, n_, out.adj_.begin() + i * size);
  }
  return out;
}

std::size_t slot_count(std::size_t num_vertices, bool directed) {
  return directed ? num_vertices * num_vertices
                  : num_vertices * (num_vertices == 0 ? 0 : num_vertices - 1) / 2;
}

Graph parse_graph(std::istream& in) {
  std::size_t n = 0;
  std::string kind;
  if (!(in >> n >> kind)) throw std::invalid_argument("graph: expected header 'V directed|undirected'");
  bool directed;
  if (kind == "directed") {
    directed = true;
  } else if (kind == "undirected") {
    directed = false;
  } else {
    throw std::invalid_argument(fmt::format("graph: unknown kind '{}'", kind));
  }
  Graph g(n, directed);
  for (std::size_t i = 0; i < n; ++i) {
    std::string row;
    if (!(in >> row) || row.size() != n) {
      throw std::invalid_argument(fmt::format("graph: row {} must have {} characters", i, n));
    }
    for (std::size_t j = 0; j < n; ++j) {
      if (row[j] != '0' && row[j] != '1') {
        throw std::invalid_argument(fmt::format("graph: bad character '{}' in row {}", row[j], i));
      }
      bool bit = row[j] == '1';
      if (directed) {
        g.set_edge(i, j, bit);
      } else if (i == j) {
        if (bit) throw std::invalid_argument("graph: undirected graph has a self-edge");
      } else if (j > i) {
        g.set_edge(i, j, bit);
      } else if (g.edge(i, j) != bit) {
        throw std::invalid_argument(fmt::format("graph: undirected matrix not symmetric at ({}, {})", i, j));
      }
    }
  }
  return g;
}

Graph parse_graph(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_graph(in);
}

std::string format_graph(const Graph& g) {
  std::string out = fmt::format("{} {}\n", g.num_vertices(), g.directed() ? "directed" : "undirected");
  for (std::size_t i = 0; i < g.num_vertices(); ++i) {
    for (std::size_t j = 0; j < g.num_vertices(); ++j) out += g.edge(i, j) ? '1' : '0';
    out += '\n';
  }
  return out;
}

namespace {

using Slot = std::pair<std::size_t, std::size_t>;

// Admissible slots in row-major order, filtered by presence.
std::vector<Slot> slots_where(const Graph& g, bool present) {
  std::vector<Slot> out;
  std::size_t n = g.num_vertices();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = g.directed() ? 0 : i + 1; j < n; ++j) {
      if (g.edge(i, j) == present) out.emplace_back(i, j);
    }
  }
  return out;
}

// Partial Fisher-Yates: the first min(k, size) entries become a uniform sample.
void choose_prefix(std::vector<Slot>& slots, std::size_t k, RandomStream& rng) {
  k = std::min(k, slots.size());
  for (std::size_t i = 0; i < k; ++i) {
    std::size_t j = i + static_cast<std::size_t>(rng.below(slots.size() - i));
    std::swap(slots[i], slots[j]);
  }
  slots.resize(k);
}

}  // namespace

Graph erdos_renyi(std::size_t num_vertices, bool directed, uint64_t seed) {
  RandomStream rng(seed);
  Graph g(num_vertices, directed);
  for (std::size_t i = 0; i < num_vertices; ++i) {
    for (std::size_t j = directed ? 0 : i + 1; j < num_vertices; ++j) {
      if (rng.coin()) g.set_edge(i, j);
    }
  }
  return g;
}

std::string_view to_string(Deformation kind) {
  switch (kind) {
    case Deformation::kIsomorphism: return "isomorphism";
    case Deformation::kVerticalFlip: return "vertical_flip";
    case Deformation::kAddEdges: return "add_edges";
    case Deformation::kRemoveEdges: return "remove_edges";
    case Deformation::kAddRemove: return "add_remove";
  }
  return "unknown";
}

Deformation parse_deformation(std::string_view name) {
  for (auto kind : {Deformation::kIsomorphism, Deformation::kVerticalFlip, Deformation::kAddEdges,
                    Deformation::kRemoveEdges, Deformation::kAddRemove}) {
    if (name == to_string(kind)) return kind;
  }
  throw std::invalid_argument(fmt::format("unknown deformation '{}'", name));
}

Graph deform(const Graph& g, Deformation kind, uint64_t seed) {
  const std::size_t n = g.num_vertices();
  RandomStream rng(seed);
  switch (kind) {
    case Deformation::kIsomorphism:
      return g;
    case Deformation::kVerticalFlip: {
      Graph out(n, g.directed());
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
          if (g.edge(n - 1 - i, n - 1 - j)) out.set_edge(i, j);
        }
      }
      return out;
    }
    case Deformation::kAddEdges:
    case Deformation::kRemoveEdges:
    case Deformation::kAddRemove: {
      Graph out = g;
      // Both pools come from the input graph, so additions and removals never
      // touch the same slot.
      std::vector<Slot> absent = slots_where(g, false);
      std::vector<Slot> present = slots_where(g, true);
      if (kind != Deformation::kRemoveEdges) {
        choose_prefix(absent, n, rng);
        for (auto [i, j] : absent) out.set_edge(i, j, true);
      }
      if (kind != Deformation::kAddEdges) {
        choose_prefix(present, n, rng);
        for (auto [i, j] : present) out.set_edge(i, j, false);
      }
      return out;
    }
  }
  throw std::invalid_argument("deform: unknown deformation");
}

namespace {

void check_comparable(const Graph& g1, const Graph& g2) {
  if (g1.directed() != g2.directed()) {
    throw std::invalid_argument("graphs differ in directedness");
  }
}

// Hot loop shared by edge_difference and the exhaustive search.
std::size_t count_difference(const Graph& g1, const Graph& g2, const std::size_t* perm) {
  const std::size_t n = g1.num_vertices();
  std::size_t diff = 0;
  if (g1.directed()) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) diff += g1.edge(i, j) != g2.edge(perm[i], perm[j]);
    }
  } else {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) diff += g1.edge(i, j) != g2.edge(perm[i], perm[j]);
    }
  }
  return diff;
}

}  // namespace

std::size_t edge_difference(const Graph& g1, const Graph& g2, std::span<const std::size_t> perm) {
  check_comparable(g1, g2);
  if (g1.num_vertices() != g2.num_vertices() || perm.size() != g1.num_vertices()) {
    throw std::invalid_argument(fmt::format("edge_difference: size mismatch ({}, {}, perm {})",
                                            g1.num_vertices(), g2.num_vertices(), perm.size()));
  }
  return count_difference(g1, g2, perm.data());
}

std::size_t edge_difference(const Graph& g1, const Graph& g2, const Permutation& perm) {
  return edge_difference(g1, g2, std::span<const std::size_t>(perm.mapping()));
}

Alignment brute_force_best(const Graph& g1, const Graph& g2, std::size_t cap) {
  check_comparable(g1, g2);
  const std::size_t n = std::max(g1.num_vertices(), g2.num_vertices());
  if (n > cap) {
    throw std::invalid_argument(fmt::format("brute force limited to {} vertices, got {}", cap, n));
  }
  const Graph a = g1.padded(n);
  const Graph b = g2.padded(n);

  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  Alignment best;
  best.permutation = Permutation(perm);
  best.difference = count_difference(a, b, perm.data());
  uint64_t index = 0;
  // next_permutation walks lexicographic order, so index is the rank.
  while (best.difference > 0 && std::next_permutation(perm.begin(), perm.end())) {
    ++index;
    std::size_t d = count_difference(a, b, perm.data());
    if (d < best.difference) {
      best.difference = d;
      best.index = index;
      best.permutation = Permutation(perm);
    }
  }
  return best;
}

double similarity(const Graph& g1, const Graph& g2, std::size_t cap) {
  Alignment best = brute_force_best(g1, g2, cap);
  std::size_t slots = slot_count(std::max(g1.num_vertices(), g2.num_vertices()), g1.directed());
  if (slots == 0) return 1.0;
  return 1.0 - static_cast<double>(best.difference) / static_cast<double>(slots);
}

}  // namespace edgeqaoa
