// Copyright 2026 The sixthgroup Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "sixth/rado.h"

#include <random>
#include <stdexcept>
#include <thread>
#include <vector>

#include "gtest/gtest.h"
#include "sixth/errors.h"
#include "test_util.h"

namespace sixth {
namespace {

using ::sixth::testing::RandomGraph;

bool IsPrime(std::uint64_t q) {
  if (q < 2) return false;
  for (std::uint64_t d = 2; d * d <= q; ++d) {
    if (q % d == 0) return false;
  }
  return true;
}

std::uint64_t NaivePrime(std::size_t index) {
  static std::vector<std::uint64_t> found;
  for (std::uint64_t q = found.empty() ? 2 : found.back() + 1;
       found.size() <= index; ++q) {
    if (IsPrime(q)) found.push_back(q);
  }
  return found[index];
}

bool NaiveAdjacent(std::uint64_t m, std::uint64_t n) {
  return n % NaivePrime(m) == 0 || m % NaivePrime(n) == 0;
}

std::uint64_t NaiveWitness(const std::vector<RadoVertex>& a,
                           const std::vector<RadoVertex>& b) {
  for (std::uint64_t x = 2;; ++x) {
    bool ok = true;
    for (const auto y : a) ok = ok && y != x && NaiveAdjacent(x, y);
    for (const auto z : b) ok = ok && z != x && !NaiveAdjacent(x, z);
    if (ok) return x;
  }
}

TEST(PrimeTest, MatchesTrialDivision) {
  for (std::size_t i = 0; i < 2000; ++i) {
    const std::uint64_t p = NaivePrime(i);
    ASSERT_EQ(nth_prime(i), p) << i;
    ASSERT_EQ(prime_index(p), i);
  }
  EXPECT_THROW(prime_index(9), std::invalid_argument);
  EXPECT_THROW(nth_prime(kPrimeIndexLimit), LimitExceeded);
}

TEST(PrimeTest, ConcurrentGrowth) {
  std::vector<std::thread> threads;
  std::vector<std::uint64_t> out(6);
  for (std::size_t k = 0; k < out.size(); ++k) {
    threads.emplace_back([&out, k] { out[k] = nth_prime(50000 + 1000 * k); });
  }
  for (auto& t : threads) t.join();
  for (std::size_t k = 0; k < out.size(); ++k) {
    EXPECT_TRUE(IsPrime(out[k]));
    EXPECT_EQ(prime_index(out[k]), 50000 + 1000 * k);
  }
}

TEST(RadoAdjacentTest, Examples) {
  EXPECT_TRUE(rado_adjacent(2, 5));
  EXPECT_FALSE(rado_adjacent(4, 9));
  EXPECT_TRUE(rado_adjacent(5, 2));
  EXPECT_THROW(rado_adjacent(1, 5), std::invalid_argument);
  EXPECT_THROW(rado_adjacent(5, 5), std::invalid_argument);
}

TEST(RadoAdjacentTest, MatchesTrialDivision) {
  for (std::uint64_t m = 2; m < 60; ++m) {
    for (std::uint64_t n = 2; n < 60; ++n) {
      if (m == n) continue;
      EXPECT_EQ(rado_adjacent(m, n), NaiveAdjacent(m, n)) << m << " " << n;
    }
  }
}

TEST(ExtensionWitnessTest, Examples) {
  EXPECT_EQ(extension_witness({}, {}), 2u);
  EXPECT_EQ(extension_witness({2}, {3}), 5u);
  EXPECT_EQ(extension_witness({2, 3}, {}), 35u);
  EXPECT_EQ(NaiveWitness({2, 3}, {}), 35u);
  EXPECT_THROW(extension_witness({2}, {2}), std::invalid_argument);
  EXPECT_THROW(extension_witness({1}, {}), std::invalid_argument);
}

TEST(ExtensionWitnessTest, IsTheLeastWitness) {
  std::mt19937 rng(71);
  for (int iter = 0; iter < 300; ++iter) {
    std::vector<RadoVertex> a;
    std::vector<RadoVertex> b;
    for (RadoVertex v = 2; v <= 9; ++v) {
      const auto r = rng() % 3;
      if (r == 0 && a.size() < 2) a.push_back(v);
      if (r == 1) b.push_back(v);
    }
    EXPECT_EQ(extension_witness(a, b), NaiveWitness(a, b));
  }
}

TEST(EmbedGraphTest, Examples) {
  EXPECT_EQ(embed_graph(Graph(1)), std::vector<RadoVertex>{2});
  EXPECT_EQ(embed_graph(Graph::complete(2)),
            (std::vector<RadoVertex>{2, extension_witness({2}, {})}));
  EXPECT_EQ(embed_graph(Graph::complete(3)), (std::vector<RadoVertex>{2, 5, 65}));
}

TEST(EmbedGraphTest, PreservesInducedAdjacencyOnSmallGraphs) {
  std::mt19937 rng(72);
  for (int iter = 0; iter < 100; ++iter) {
    const Graph g = RandomGraph(rng, 1 + iter % 5);
    const auto image = embed_graph(g);
    EXPECT_EQ(rado_induced_subgraph(image), g);
  }
}

}  // namespace
}  // namespace sixth
