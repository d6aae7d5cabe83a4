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

#include <cmath>
#include <set>

#include "gtest/gtest.h"
#include "oracle/oracle.h"

namespace edgeqaoa {
namespace {

TEST(Factorial, ValuesAndRange) {
  EXPECT_EQ(factorial(0), 1u);
  EXPECT_EQ(factorial(10), 3628800u);
  EXPECT_EQ(factorial(12), 479001600u);
  EXPECT_EQ(factorial(20), 2432902008176640000u);
  EXPECT_THROW(factorial(21), std::out_of_range);
  EXPECT_THROW(factorial(-1), std::out_of_range);
}

TEST(QubitCount, TableValues) {
  EXPECT_EQ(qubit_count(2), 1);
  EXPECT_EQ(qubit_count(4), 5);
  EXPECT_EQ(qubit_count(8), 16);
  EXPECT_EQ(qubit_count(10), 22);
  EXPECT_EQ(qubit_count(12), 29);
}

TEST(QubitCount, IsTheSmallestSufficientWidth) {
  for (int v = 2; v <= kMaxFactorialArg; ++v) {
    const int q = qubit_count(v);
    const long double f = static_cast<long double>(factorial(v));
    EXPECT_LT(std::ldexp(1.0L, q - 1), f) << v;
    EXPECT_LE(f, std::ldexp(1.0L, q)) << v;
  }
}

TEST(KthPermutation, IdentityAndReversalAtTheEnds) {
  EXPECT_EQ(kth_permutation(4, 0).mapping(), (std::vector<std::size_t>{0, 1, 2, 3}));
  EXPECT_EQ(kth_permutation(3, 5).mapping(), (std::vector<std::size_t>{2, 1, 0}));
  for (int n = 1; n <= 12; ++n) {
    std::vector<std::size_t> reversed(n);
    for (int i = 0; i < n; ++i) reversed[i] = n - 1 - i;
    EXPECT_EQ(kth_permutation(n, factorial(n) - 1).mapping(), reversed) << n;
  }
}

TEST(KthPermutation, MatchesLexicographicEnumeration) {
  for (int n = 1; n <= 6; ++n) {
    const auto perms = oracle::lexicographic_permutations(n);
    ASSERT_EQ(perms.size(), factorial(n));
    for (uint64_t k = 0; k < perms.size(); ++k) ASSERT_EQ(kth_permutation(n, k).mapping(), perms[k]);
  }
}

TEST(KthPermutation, BijectiveAndOrdered) {
  for (int n = 1; n <= 7; ++n) {
    std::set<std::vector<std::size_t>> seen;
    std::vector<std::size_t> prev;
    for (uint64_t k = 0; k < factorial(n); ++k) {
      std::vector<std::size_t> p = kth_permutation(n, k).mapping();
      if (k > 0) {
        ASSERT_LT(prev, p);
      }
      seen.insert(p);
      prev = std::move(p);
    }
    EXPECT_EQ(seen.size(), factorial(n));
  }
}

TEST(KthPermutation, RejectsInfeasibleIndex) {
  EXPECT_THROW(kth_permutation(3, 6), std::out_of_range);
}

TEST(IsFeasible, Boundaries) {
  EXPECT_TRUE(is_feasible(0, 3));
  EXPECT_TRUE(is_feasible(40319, 8));
  EXPECT_FALSE(is_feasible(40320, 8));
  EXPECT_TRUE(is_feasible(UINT64_MAX, 21));
}

TEST(IsFeasible, CountOverTheRegisterForTenVertices) {
  const uint64_t states = uint64_t{1} << qubit_count(10);
  uint64_t feasible = 0;
  for (uint64_t k = 0; k < states; ++k) feasible += is_feasible(k, 10);
  EXPECT_EQ(feasible, 3628800u);
}

TEST(TailStats, TableRows) {
  EXPECT_EQ(tail_stats(2).tail_count, 0u);
  EXPECT_EQ(tail_stats(2).tail_over_feasible, 0.0);
  EXPECT_EQ(tail_stats(8).tail_count, 25216u);
  EXPECT_NEAR(tail_stats(8).tail_over_feasible, 0.6254, 1e-4);
  EXPECT_EQ(tail_stats(10).tail_count, 565504u);
  EXPECT_NEAR(tail_stats(10).tail_over_feasible, 0.1558, 1e-4);
  EXPECT_EQ(tail_stats(12).tail_count, 57869312u);
  // Four vertices: 2^5 - 4! = 8.
  EXPECT_EQ(tail_stats(4).tail_count, 8u);
  EXPECT_THROW(tail_stats(1), std::out_of_range);
}

}  // namespace
}  // namespace edgeqaoa
