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
#include <numeric>

#include "edgeqaoa/permutation.h"
#include "gtest/gtest.h"
#include "oracle/oracle.h"

namespace edgeqaoa {
namespace {

// The 4-vertex directed pair used throughout: four edges each, differing in
// one edge (2->1 versus 3->2) under the identity alignment.
Graph first_pair_graph() {
  Graph g(4, true);
  g.set_edge(0, 1);
  g.set_edge(0, 2);
  g.set_edge(2, 1);
  g.set_edge(1, 3);
  return g;
}

Graph second_pair_graph() {
  Graph g(4, true);
  g.set_edge(0, 1);
  g.set_edge(1, 3);
  g.set_edge(3, 2);
  g.set_edge(0, 2);
  return g;
}

Graph relabel(const Graph& g, const Permutation& p) {
  Graph out(g.num_vertices(), g.directed());
  for (std::size_t i = 0; i < g.num_vertices(); ++i) {
    for (std::size_t j = 0; j < g.num_vertices(); ++j) {
      if (g.edge(i, j) && (g.directed() || i < j)) out.set_edge(p[i], p[j]);
    }
  }
  return out;
}

Permutation random_permutation(std::size_t n, std::mt19937_64& rng) {
  std::vector<std::size_t> m(n);
  std::iota(m.begin(), m.end(), std::size_t{0});
  std::shuffle(m.begin(), m.end(), rng);
  return Permutation(m);
}

TEST(Permutation, RejectsNonBijections) {
  EXPECT_THROW(Permutation({0, 0, 1}), std::invalid_argument);
  EXPECT_THROW(Permutation({0, 3, 1}), std::invalid_argument);
  EXPECT_NO_THROW(Permutation({2, 0, 1}));
}

TEST(Permutation, InverseComposesToIdentity) {
  const Permutation p({2, 0, 3, 1});
  const Permutation inv = p.inverse();
  for (std::size_t i = 0; i < 4; ++i) EXPECT_EQ(inv[p[i]], i);
}

TEST(Graph, UndirectedSetsBothDirectionsAndRejectsSelfEdges) {
  Graph g(3, false);
  g.set_edge(0, 2);
  EXPECT_TRUE(g.edge(2, 0));
  EXPECT_EQ(g.edge_count(), 1u);
  EXPECT_THROW(g.set_edge(1, 1), std::invalid_argument);
}

TEST(Graph, SlotCounts) {
  EXPECT_EQ(slot_count(4, true), 16u);
  EXPECT_EQ(slot_count(4, false), 6u);
  EXPECT_EQ(slot_count(0, true), 0u);
  EXPECT_EQ(Graph(5, false).slot_count(), 10u);
}

TEST(Graph, PaddingAddsIsolatedVertices) {
  const Graph g = first_pair_graph().padded(6);
  EXPECT_EQ(g.num_vertices(), 6u);
  EXPECT_EQ(g.edge_count(), 4u);
  EXPECT_TRUE(g.edge(2, 1));
  EXPECT_THROW(first_pair_graph().padded(3), std::invalid_argument);
}

TEST(GraphText, RoundTrip) {
  const Graph g = first_pair_graph();
  const std::string text = format_graph(g);
  EXPECT_EQ(text, "4 directed\n0110\n0001\n0100\n0000\n");
  EXPECT_EQ(parse_graph(text), g);
}

TEST(GraphText, RejectsMalformedInput) {
  EXPECT_THROW(parse_graph("3 sideways\n000\n000\n000\n"), std::invalid_argument);
  EXPECT_THROW(parse_graph("2 directed\n01\n0\n"), std::invalid_argument);
  EXPECT_THROW(parse_graph("2 undirected\n01\n00\n"), std::invalid_argument);
  EXPECT_THROW(parse_graph("2 undirected\n10\n00\n"), std::invalid_argument);
  EXPECT_THROW(parse_graph("2 directed\n0x\n00\n"), std::invalid_argument);
}

TEST(ErdosRenyi, EmptyGraph) {
  const Graph g = erdos_renyi(0, true, 3);
  EXPECT_EQ(g.num_vertices(), 0u);
  EXPECT_EQ(g.edge_count(), 0u);
}

TEST(ErdosRenyi, SameSeedSameGraph) {
  EXPECT_EQ(erdos_renyi(6, true, 11), erdos_renyi(6, true, 11));
  EXPECT_EQ(erdos_renyi(6, false, 11), erdos_renyi(6, false, 11));
  EXPECT_NE(erdos_renyi(6, true, 11), erdos_renyi(6, true, 12));
}

TEST(ErdosRenyi, MeanDensityIsOneHalf) {
  // 10^4 seeds of 64 slots each: the standard error of the mean density is
  // 0.5 / sqrt(640000) ~ 6e-4, so 0.01 is a very wide band.
  double total = 0.0;
  for (uint64_t seed = 0; seed < 10000; ++seed) {
    total += static_cast<double>(erdos_renyi(8, true, seed).edge_count()) / 64.0;
  }
  EXPECT_NEAR(total / 10000.0, 0.5, 0.01);
}

TEST(ErdosRenyi, UndirectedNeverHasSelfEdges) {
  for (uint64_t seed = 0; seed < 100; ++seed) {
    const Graph g = erdos_renyi(5, false, seed);
    for (std::size_t i = 0; i < 5; ++i) ASSERT_FALSE(g.edge(i, i));
  }
}

TEST(Deform, IsomorphismIsIdenticalCopy) {
  const Graph g = erdos_renyi(5, true, 1);
  EXPECT_EQ(deform(g, Deformation::kIsomorphism, 99), g);
}

TEST(Deform, VerticalFlipIsAnInvolutionAndReversesBothAxes) {
  for (bool directed : {true, false}) {
    const Graph g = erdos_renyi(6, directed, 4);
    const Graph f = deform(g, Deformation::kVerticalFlip, 0);
    EXPECT_EQ(deform(f, Deformation::kVerticalFlip, 0), g);
    EXPECT_EQ(f.edge_count(), g.edge_count());
    for (std::size_t i = 0; i < 6; ++i) {
      for (std::size_t j = 0; j < 6; ++j) EXPECT_EQ(f.edge(i, j), g.edge(5 - i, 5 - j));
    }
  }
}

TEST(Deform, RemoveEdgesDropsExactlyMinVOrE) {
  for (uint64_t seed = 0; seed < 40; ++seed) {
    const Graph g = erdos_renyi(5, seed % 2 == 0, seed);
    const Graph r = deform(g, Deformation::kRemoveEdges, seed + 100);
    EXPECT_EQ(r.edge_count(), g.edge_count() - std::min<std::size_t>(5, g.edge_count()));
    for (std::size_t i = 0; i < 5; ++i) {
      for (std::size_t j = 0; j < 5; ++j) {
        if (r.edge(i, j)) {
          EXPECT_TRUE(g.edge(i, j));
        }
      }
    }
  }
}

TEST(Deform, AddEdgesSetsExactlyMinVOrAbsent) {
  for (uint64_t seed = 0; seed < 40; ++seed) {
    const Graph g = erdos_renyi(5, seed % 2 == 0, seed);
    const Graph a = deform(g, Deformation::kAddEdges, seed + 100);
    const std::size_t absent = g.slot_count() - g.edge_count();
    EXPECT_EQ(a.edge_count(), g.edge_count() + std::min<std::size_t>(5, absent));
  }
}

TEST(Deform, AddRemoveUsesDisjointSlots) {
  for (uint64_t seed = 0; seed < 40; ++seed) {
    const Graph g = erdos_renyi(5, true, seed);
    const Graph d = deform(g, Deformation::kAddRemove, seed);
    std::size_t added = 0, removed = 0;
    for (std::size_t i = 0; i < 5; ++i) {
      for (std::size_t j = 0; j < 5; ++j) {
        added += !g.edge(i, j) && d.edge(i, j);
        removed += g.edge(i, j) && !d.edge(i, j);
      }
    }
    EXPECT_EQ(added, std::min<std::size_t>(5, 25 - g.edge_count()));
    EXPECT_EQ(removed, std::min<std::size_t>(5, g.edge_count()));
  }
}

TEST(Deform, ClampsOnSparseAndDenseGraphs) {
  Graph empty(4, true);
  EXPECT_EQ(deform(empty, Deformation::kRemoveEdges, 1).edge_count(), 0u);
  Graph full(3, false);
  full.set_edge(0, 1);
  full.set_edge(0, 2);
  full.set_edge(1, 2);
  EXPECT_EQ(deform(full, Deformation::kAddEdges, 1), full);
}

TEST(Deform, NamesRoundTrip) {
  for (Deformation d : {Deformation::kIsomorphism, Deformation::kVerticalFlip, Deformation::kAddEdges,
                        Deformation::kRemoveEdges, Deformation::kAddRemove}) {
    EXPECT_EQ(parse_deformation(to_string(d)), d);
  }
  EXPECT_THROW(parse_deformation("shuffle"), std::invalid_argument);
}

TEST(EdgeDifference, SelfUnderIdentityIsZero) {
  const Graph g = erdos_renyi(6, true, 3);
  EXPECT_EQ(edge_difference(g, g, Permutation::identity(6)), 0u);
}

TEST(EdgeDifference, PairDiffersInTwoSlotsUnderIdentity) {
  EXPECT_EQ(edge_difference(first_pair_graph(), second_pair_graph(), Permutation::identity(4)), 2u);
}

TEST(EdgeDifference, MatchesNaiveRecount) {
  std::mt19937_64 rng(17);
  for (uint64_t seed = 0; seed < 50; ++seed) {
    const bool directed = seed % 2 == 0;
    const Graph a = erdos_renyi(4, directed, seed);
    const Graph b = erdos_renyi(4, directed, seed + 1000);
    const Permutation p = random_permutation(4, rng);
    EXPECT_EQ(edge_difference(a, b, p),
              oracle::naive_difference(oracle::adjacency(a), oracle::adjacency(b), p.mapping(), directed));
  }
}

TEST(EdgeDifference, SwappingGraphsInvertsThePermutation) {
  std::mt19937_64 rng(2);
  for (uint64_t seed = 0; seed < 50; ++seed) {
    const bool directed = seed % 2 == 1;
    const Graph a = erdos_renyi(5, directed, seed);
    const Graph b = erdos_renyi(5, directed, seed + 77);
    const Permutation p = random_permutation(5, rng);
    EXPECT_EQ(edge_difference(a, b, p), edge_difference(b, a, p.inverse()));
  }
}

TEST(EdgeDifference, RejectsMismatches) {
  EXPECT_THROW(edge_difference(Graph(3, true), Graph(4, true), Permutation::identity(3)),
               std::invalid_argument);
  EXPECT_THROW(edge_difference(Graph(3, true), Graph(3, false), Permutation::identity(3)),
               std::invalid_argument);
  EXPECT_THROW(edge_difference(Graph(3, true), Graph(3, true), Permutation::identity(2)),
               std::invalid_argument);
}

TEST(BruteForce, PairHasMinimumTwoAndSimilarity0875) {
  const Alignment best = brute_force_best(first_pair_graph(), second_pair_graph());
  EXPECT_EQ(best.difference, 2u);
  EXPECT_EQ(similarity(first_pair_graph(), second_pair_graph()), 0.875);
}

TEST(BruteForce, IsomorphicPairHasDifferenceZero) {
  std::mt19937_64 rng(8);
  for (uint64_t seed = 0; seed < 20; ++seed) {
    const Graph g = erdos_renyi(5, seed % 2 == 0, seed);
    const Graph h = relabel(g, random_permutation(5, rng));
    EXPECT_EQ(brute_force_best(g, h).difference, 0u);
    EXPECT_EQ(similarity(g, h), 1.0);
  }
}

TEST(BruteForce, MatchesIndependentEnumerationWithLexicographicTies) {
  const auto perms = oracle::lexicographic_permutations(3);
  for (uint64_t seed = 0; seed < 60; ++seed) {
    const bool directed = seed % 3 != 0;
    const Graph a = erdos_renyi(3, directed, seed);
    const Graph b = erdos_renyi(3, directed, seed + 500);
    std::size_t best = SIZE_MAX, best_k = 0;
    for (std::size_t k = 0; k < perms.size(); ++k) {
      const std::size_t d =
          oracle::naive_difference(oracle::adjacency(a), oracle::adjacency(b), perms[k], directed);
      if (d < best) {
        best = d;
        best_k = k;
      }
    }
    const Alignment got = brute_force_best(a, b);
    EXPECT_EQ(got.difference, best);
    EXPECT_EQ(got.index, best_k);
    EXPECT_EQ(got.permutation.mapping(), perms[best_k]);
  }
}

TEST(BruteForce, InvariantUnderRelabelingEitherGraph) {
  std::mt19937_64 rng(21);
  for (uint64_t seed = 0; seed < 20; ++seed) {
    const bool directed = seed % 2 == 0;
    const Graph a = erdos_renyi(5, directed, seed);
    const Graph b = erdos_renyi(5, directed, seed + 40);
    const std::size_t d = brute_force_best(a, b).difference;
    EXPECT_EQ(brute_force_best(relabel(a, random_permutation(5, rng)), b).difference, d);
    EXPECT_EQ(brute_force_best(a, relabel(b, random_permutation(5, rng))).difference, d);
    EXPECT_LE(d, a.slot_count());
  }
}

TEST(BruteForce, PadsSmallerGraph) {
  Graph small(2, true);
  small.set_edge(0, 1);
  const Alignment best = brute_force_best(small, first_pair_graph());
  EXPECT_EQ(best.permutation.size(), 4u);
  // The one edge of `small` can land on an edge of the larger graph.
  EXPECT_EQ(best.difference, 3u);
}

TEST(BruteForce, EnforcesCap) {
  EXPECT_THROW(brute_force_best(Graph(11, true), Graph(11, true)), std::invalid_argument);
  EXPECT_THROW(brute_force_best(Graph(4, true), Graph(4, true), 3), std::invalid_argument);
}

TEST(Similarity, SymmetricOnRandomPairs) {
  for (uint64_t seed = 0; seed < 100; ++seed) {
    const bool directed = seed % 2 == 0;
    const Graph a = erdos_renyi(4, directed, seed);
    const Graph b = erdos_renyi(4, directed, seed + 1000);
    EXPECT_EQ(similarity(a, b), similarity(b, a));
    const double s = similarity(a, b);
    EXPECT_GE(s, 0.0);
    EXPECT_LE(s, 1.0);
  }
}

}  // namespace
}  // namespace edgeqaoa
