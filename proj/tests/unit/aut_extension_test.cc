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

#include "sixth/aut_extension.h"

#include <random>
#include <vector>

#include "gtest/gtest.h"
#include "sixth/graphrel.h"
#include "test_util.h"

namespace sixth {
namespace {

using ::sixth::testing::W;

// Every injective partial map with |dom| <= max_dom on the given codes.
std::vector<PartialMap> AllMaps(const std::vector<Code>& codes,
                                std::size_t max_dom) {
  std::vector<PartialMap> out{PartialMap()};
  std::vector<std::vector<std::pair<Code, Code>>> frontier{{}};
  for (std::size_t d = 1; d <= max_dom; ++d) {
    std::vector<std::vector<std::pair<Code, Code>>> next;
    for (const auto& base : frontier) {
      const Code min_arg = base.empty() ? 0 : base.back().first + 1;
      for (const Code a : codes) {
        if (a < min_arg) continue;
        for (const Code b : codes) {
          bool used = false;
          for (const auto& pr : base) used = used || pr.second == b;
          if (used) continue;
          auto pairs = base;
          pairs.emplace_back(a, b);
          out.emplace_back(pairs);
          next.push_back(std::move(pairs));
        }
      }
    }
    frontier = std::move(next);
  }
  return out;
}

TEST(SigmaTest, IdentityMap) {
  const ExtensionResult r = sigma_ns_nonempty(Graph::complete(2), PartialMap({{0, 0}}));
  EXPECT_TRUE(r.nonempty);
  ASSERT_TRUE(r.witness);
  EXPECT_EQ(r.witness->rho, (Permutation{0, 1}));
  EXPECT_EQ(r.witness->k, 0u);
  EXPECT_EQ(r.witness->l, 0);
}

TEST(SigmaTest, SwapOnEdge) {
  const ExtensionResult r = sigma_ns_nonempty(Graph::complete(2), PartialMap({{1, 4}}));
  EXPECT_TRUE(r.nonempty);
  ASSERT_TRUE(r.witness);
  EXPECT_EQ(r.witness->r, (std::vector<std::pair<std::size_t, std::size_t>>{{0, 1}}));
  EXPECT_EQ(r.witness->rho, (Permutation{1, 0}));
  EXPECT_EQ(r.witness->k, 0u);
  EXPECT_EQ(r.witness->k_inverse, 0u);
  EXPECT_EQ(r.witness->l, 0);
}

TEST(SigmaTest, IdentityCannotMoveToGenerator) {
  const ExtensionResult r = sigma_ns_nonempty(Graph::complete(2), PartialMap({{0, 1}}));
  EXPECT_FALSE(r.nonempty);
  EXPECT_FALSE(r.bound_exhausted);
  EXPECT_NE(r.reason.find("condition (1)"), std::string::npos);
}

TEST(SigmaTest, CodesOutsideTheSpaceAreRejected) {
  EXPECT_FALSE(sigma_ns_nonempty(Graph::complete(2), PartialMap({{7, 7}})).nonempty);
  EXPECT_FALSE(sigma_ns_nonempty(Graph(1), PartialMap({{15, 3}})).nonempty);
  EXPECT_FALSE(oracle_aut_extends(Graph::complete(2), PartialMap({{7, 7}}), 1));
}

TEST(SigmaTest, NonAutomorphismIsRejected) {
  // 0 -> 1 on the path 0-1-2 would move the middle vertex to an end.
  EXPECT_FALSE(sigma_ns_nonempty(Graph::path(3), PartialMap({{1, 4}, {4, 1}}), 1)
                   .nonempty);
  EXPECT_FALSE(oracle_aut_extends(Graph::path(3), PartialMap({{1, 4}, {4, 1}}), 1));
}

TEST(SigmaTest, ConjugatedAutomorphismHasNonzeroConjugatorCode) {
  const Graph g = Graph::path(3);
  CodingTable table(g);
  const CanonicalAuto a{{2, 1, 0}, 1, W("g1")};
  const GeneratorMap m = induced_map(g, a);
  std::vector<std::pair<Code, Code>> pairs;
  for (Generator i = 0; i < 3; ++i) {
    pairs.emplace_back(generator_code(i),
                       table.code_of(m.image(i)));
  }
  const PartialMap s(pairs);
  AutExtensionChecker checker(table, 1);
  const ExtensionResult r = checker.check(s);
  ASSERT_TRUE(r.nonempty);
  EXPECT_EQ(r.witness->t, W("g1"));
  EXPECT_EQ(r.witness->k, 4u);
  EXPECT_EQ(r.witness->k_inverse, 5u);
  EXPECT_EQ(table.star(r.witness->k, r.witness->k_inverse), 0u);
  EXPECT_TRUE(r.at_bound);
  CanonicalAutOracle oracle(table, 1);
  EXPECT_EQ(oracle.find(s), a);
}

TEST(SigmaTest, ShortBoundIsFlagged) {
  const Graph g = Graph::path(3);
  CodingTable table(g);
  const GeneratorMap m = induced_map(g, CanonicalAuto{{0, 1, 2}, 1, W("g1 g0")});
  // The image of g0 alone is also reached by t = g1.
  const PartialMap s({{4, table.code_of(m.image(1))}});
  const ExtensionResult r = AutExtensionChecker(table, 1).check(s);
  EXPECT_FALSE(r.nonempty);
  EXPECT_TRUE(r.bound_exhausted);
  EXPECT_TRUE(AutExtensionChecker(table, 2).check(s).nonempty);
}

TEST(SigmaTest, DefaultBoundCoversGeneratorImages) {
  const Graph g = Graph::path(3);
  CodingTable table(g);
  const GeneratorMap m = induced_map(g, CanonicalAuto{{0, 1, 2}, -1, W("g2 g1")});
  const PartialMap s({{1, table.code_of(m.image(0))}});
  EXPECT_EQ(default_extension_bound(table, s), 2u);
  EXPECT_TRUE(sigma_ns_nonempty(g, s).nonempty);
}

TEST(OracleTest, Examples) {
  EXPECT_TRUE(oracle_aut_extends(Graph::complete(2), PartialMap({{0, 0}}), 2));
  EXPECT_TRUE(oracle_aut_extends(Graph::complete(2), PartialMap({{1, 4}}), 2));
  EXPECT_FALSE(oracle_aut_extends(Graph::complete(2), PartialMap({{0, 1}}), 2));
}

TEST(AgreementTest, VerifiedModeMatchesOracleOnSmallGrid) {
  std::vector<Graph> graphs{Graph(1), Graph::complete(2), Graph::empty(2),
                            Graph::path(3)};
  for (const Graph& g : graphs) {
    CodingTable table(g);
    std::vector<Code> codes;
    for (Code c = 0; c <= 9; ++c) {
      if (table.in_code_space(c)) codes.push_back(c);
    }
    AutExtensionChecker checker(table, 1);
    CanonicalAutOracle oracle(table, 1);
    for (const PartialMap& s : AllMaps(codes, 2)) {
      EXPECT_EQ(checker.check(s).nonempty, oracle.extends(s))
          << format_graph(g) << format_partial_map(s);
    }
  }
}

TEST(AgreementTest, LiteralModeMatchesOracleOnInitialSegments) {
  for (const Graph& g : {Graph::complete(2), Graph::empty(2)}) {
    CodingTable table(g);
    std::vector<Code> codes;
    for (Code c = 0; c <= 9; ++c) codes.push_back(c);
    AutExtensionChecker checker(table, 1, ExtensionMode::kLiteral);
    CanonicalAutOracle oracle(table, 1);
    // Maps whose domain is {0, ..., k-1}.
    for (const PartialMap& s : AllMaps(codes, 3)) {
      bool segment = true;
      for (std::size_t i = 0; i < s.size(); ++i) {
        segment = segment && s.pairs()[i].first == i;
      }
      if (!segment) continue;
      EXPECT_EQ(checker.check(s).nonempty, oracle.extends(s))
          << format_graph(g) << format_partial_map(s);
    }
  }
}

TEST(AgreementTest, LiteralModeDiffersOffSegments) {
  // 3 = g0 g0 is sent to a composite that no automorphism reaches, and no
  // generator code constrains the candidate.
  const Graph g = Graph::complete(2);
  const PartialMap s({{3, 6}});
  EXPECT_TRUE(sigma_ns_nonempty(g, s, 1, ExtensionMode::kLiteral).nonempty);
  EXPECT_FALSE(sigma_ns_nonempty(g, s, 1, ExtensionMode::kVerified).nonempty);
  EXPECT_FALSE(oracle_aut_extends(g, s, 1));
}

}  // namespace
}  // namespace sixth
