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

#include "sixth/coding.h"

#include <map>
#include <random>
#include <set>
#include <stdexcept>
#include <thread>
#include <vector>

#include "gtest/gtest.h"
#include "sixth/errors.h"
#include "sixth/graphrel.h"
#include "sixth/williams.h"
#include "test_util.h"

namespace sixth {
namespace {

using ::sixth::testing::RandomGraph;
using ::sixth::testing::RandomWord;
using ::sixth::testing::W;

// Straight from the rules: walk every reduced word in shortlex order, keep
// the ones equal to no earlier keeper, and give each composite the least
// unused multiple of 3 above the codes of all its proper subwords.
std::vector<std::pair<Code, Word>> NaiveTable(const Graph& g,
                                              std::size_t max_len) {
  const Presentation p = williams_presentation(g);
  std::vector<std::pair<Code, Word>> kept;
  std::set<Code> used;
  auto code_of = [&](const Word& w) {
    for (const auto& [c, rep] : kept) {
      if (equal(p, w, rep)) return c;
    }
    ADD_FAILURE() << "subword not registered: " << format_word(w);
    return Code{0};
  };
  for (const Word& w : reduced_words(g.size(), max_len)) {
    bool fresh = true;
    for (const auto& entry : kept) {
      if (equal(p, w, entry.second)) {
        fresh = false;
        break;
      }
    }
    if (!fresh) continue;
    Code c = 0;
    if (w.size() == 1) {
      c = w[0].sign() > 0 ? generator_code(w[0].index())
                          : inverse_generator_code(w[0].index());
    } else if (w.size() > 1) {
      Code above = 0;
      for (std::size_t i = 0; i < w.size(); ++i) {
        for (std::size_t len = 1; i + len <= w.size(); ++len) {
          if (len == w.size()) continue;
          above = std::max(above, code_of(subword(w, i, len)));
        }
      }
      c = 3 * (above / 3 + 1);
      while (used.contains(c)) c += 3;
    }
    used.insert(c);
    kept.emplace_back(c, w);
  }
  std::sort(kept.begin(), kept.end());
  return kept;
}

TEST(CodingTableTest, IdentityOnly) {
  CodingTable t(Graph::complete(2));
  t.extend_to_code(0);
  EXPECT_EQ(t.find_word(0), Word());
  EXPECT_EQ(t.code_of(Word()), 0u);
}

TEST(CodingTableTest, EdgeUpToFive) {
  CodingTable t(Graph::complete(2));
  t.extend_to_code(5);
  EXPECT_EQ(t.find_word(0), Word());
  EXPECT_EQ(t.find_word(1), W("g0"));
  EXPECT_EQ(t.find_word(2), W("G0"));
  EXPECT_EQ(t.find_word(3), W("g0 g0"));
  EXPECT_EQ(t.find_word(4), W("g1"));
  EXPECT_EQ(t.find_word(5), W("G1"));
}

TEST(CodingTableTest, EdgeTableFirstEntries) {
  CodingTable t(Graph::complete(2));
  t.extend_to_length(2);
  const std::vector<std::pair<Code, Word>> expected{
      {0, W("e")},     {1, W("g0")},     {2, W("G0")},     {3, W("g0 g0")},
      {4, W("g1")},    {5, W("G1")},     {6, W("g0 g1")},  {9, W("g0 G1")},
      {12, W("G0 G0")}, {15, W("G0 g1")}, {18, W("G0 G1")}, {21, W("g1 g0")},
      {24, W("g1 G0")}, {27, W("g1 g1")}, {30, W("G1 g0")}, {33, W("G1 G0")},
      {36, W("G1 G1")}};
  EXPECT_EQ(t.entries(), expected);
}

TEST(CodingTableTest, CodeOfExamples) {
  CodingTable t(Graph::path(3));
  EXPECT_EQ(t.code_of(Word()), 0u);
  EXPECT_EQ(t.code_of(W("g2")), 7u);
  EXPECT_EQ(t.code_of(Word::generator_power(0, 7)), 0u);
  EXPECT_EQ(t.code_of(Word::generator_power(0, 8)), 1u);
  EXPECT_EQ(t.code_of(Word::generator_power(0, 4)), t.code_of(W("G0 G0 G0")));
  EXPECT_EQ(t.word_of(8), W("G2"));
  for (Generator i = 0; i < 3; ++i) {
    EXPECT_EQ(t.word_of(inverse_generator_code(i)),
              invert(t.word_of(generator_code(i))));
  }
}

TEST(CodingTableTest, CodesOutsideTheSpace) {
  CodingTable t(Graph::complete(2));
  EXPECT_FALSE(t.in_code_space(7));
  EXPECT_FALSE(t.in_code_space(8));
  EXPECT_TRUE(t.in_code_space(3000));
  EXPECT_THROW(t.word_of(7), std::out_of_range);
}

TEST(CodingTableTest, CyclicGroupIsExhausted) {
  CodingTable t(Graph(1));
  t.extend_to_code(100);
  EXPECT_TRUE(t.exhausted());
  EXPECT_EQ(t.size(), 7u);
  std::set<Code> codes;
  for (const auto& [c, w] : t.entries()) codes.insert(c);
  EXPECT_EQ(codes, (std::set<Code>{0, 1, 2, 3, 6, 9, 12}));
  EXPECT_FALSE(t.in_code_space(15));
  EXPECT_THROW(t.word_of(15), std::out_of_range);
}

TEST(CodingTableTest, CandidateBudget) {
  CodingTable t(Graph::complete(3), kDefaultDehnBudget, 10);
  EXPECT_THROW(t.extend_to_code(500), BudgetExceeded);
}

TEST(CodingTableTest, MatchesNaiveConstruction) {
  std::vector<Graph> graphs = all_graphs(2);
  graphs.push_back(Graph(1));
  graphs.push_back(Graph::path(3));
  graphs.push_back(Graph::complete(3));
  graphs.push_back(Graph::empty(3));
  for (const Graph& g : graphs) {
    const std::size_t len = g.size() <= 2 ? 4 : 3;
    CodingTable t(g);
    t.extend_to_length(len);
    EXPECT_EQ(t.entries(), NaiveTable(g, len)) << format_graph(g);
  }
}

TEST(CodingTableTest, MonotoneCodesWhenHighGeneratorsAppear) {
  // With six generators g5 has code 16, so g0 g5 must land above it.
  CodingTable t(Graph::path(6));
  const Code c = t.code_of(W("g0 g5"));
  EXPECT_GT(c, 16u);
  EXPECT_EQ(c % 3, 0u);
}

TEST(StarTest, Examples) {
  CodingTable t(Graph::complete(2));
  for (Code m : {0u, 1u, 3u, 5u, 9u}) {
    EXPECT_EQ(t.star(0, m), m);
    EXPECT_EQ(t.star(m, 0), m);
  }
  EXPECT_EQ(t.star(1, 2), 0u);
  EXPECT_EQ(t.star(4, 5), 0u);
  EXPECT_EQ(t.star(1, 1), 3u);
  EXPECT_EQ(t.star(1, 1), t.code_of(W("g0 g0")));
  EXPECT_EQ(t.find_star(1, 1), 3u);
}

TEST(StarTest, MatchesWordProducts) {
  std::mt19937 rng(61);
  CodingTable t(Graph::path(3));
  t.extend_to_code(40);
  std::vector<std::pair<Code, Word>> entries;
  for (auto& e : t.entries()) {
    if (e.first <= 40) entries.push_back(std::move(e));
  }
  for (int iter = 0; iter < 300; ++iter) {
    const auto& [a, wa] = entries[rng() % entries.size()];
    const auto& [b, wb] = entries[rng() % entries.size()];
    const Code ab = t.star(a, b);
    EXPECT_TRUE(equal(t.presentation(), t.word_of(ab), wa * wb));
    EXPECT_EQ(t.star(ab, t.inverse_code(b)), a);
  }
}

TEST(StarTest, AssociativityOnRandomTriples) {
  std::mt19937 rng(62);
  CodingTable t(Graph::empty(2));
  t.extend_to_code(40);
  std::vector<std::pair<Code, Word>> entries;
  for (auto& e : t.entries()) {
    if (e.first <= 40) entries.push_back(std::move(e));
  }
  for (int iter = 0; iter < 200; ++iter) {
    const Code a = entries[rng() % entries.size()].first;
    const Code b = entries[rng() % entries.size()].first;
    const Code c = entries[rng() % entries.size()].first;
    EXPECT_EQ(t.star(t.star(a, b), c), t.star(a, t.star(b, c)));
  }
}

TEST(InvariantsTest, HoldOnSmallGraphs) {
  std::mt19937 rng(63);
  for (std::size_t n = 1; n <= 4; ++n) {
    const Graph g = RandomGraph(rng, n);
    CodingTable t(g);
    t.extend_to_code(200);
    const InvariantReport report = check_invariants(t);
    EXPECT_TRUE(report.ok) << (report.violations.empty()
                                   ? std::string()
                                   : report.violations.front());
  }
}

TEST(InvariantsTest, CodeOfRespectsEquality) {
  std::mt19937 rng(64);
  CodingTable t(Graph::path(3));
  const Presentation& p = t.presentation();
  const auto& rel = p.relators().relators();
  for (int iter = 0; iter < 100; ++iter) {
    const Word w = RandomWord(rng, 3, 3);
    const Word c = RandomWord(rng, 3, 2);
    const Word same = w * c * rel[rng() % rel.size()] * invert(c);
    EXPECT_EQ(t.code_of(w), t.code_of(same));
    EXPECT_EQ(t.code_of(t.word_of(t.code_of(w))), t.code_of(w));
  }
}

TEST(InvariantsTest, ConcurrentReaders) {
  CodingTable t(Graph::complete(3));
  std::vector<std::thread> threads;
  std::vector<Code> results(8);
  for (std::size_t k = 0; k < results.size(); ++k) {
    threads.emplace_back([&t, &results, k] {
      results[k] = t.code_of(parse_word("g0 g1 G2 g0"));
    });
  }
  for (auto& th : threads) th.join();
  for (const Code c : results) EXPECT_EQ(c, results.front());
  EXPECT_TRUE(check_invariants(t).ok);
}

TEST(PartialMapTest, ValidatesAndParses) {
  EXPECT_THROW(PartialMap({{1, 2}, {1, 3}}), std::invalid_argument);
  EXPECT_THROW(PartialMap({{1, 2}, {3, 2}}), std::invalid_argument);
  const PartialMap s({{3, 6}, {1, 4}});
  EXPECT_EQ(s.at(1), 4u);
  EXPECT_FALSE(s.contains(2));
  EXPECT_EQ(s.pairs().front().first, 1u);
  EXPECT_EQ(parse_partial_map("# x\n1 4\n3 6\n"), s);
  EXPECT_EQ(parse_partial_map(format_partial_map(s)), s);
  EXPECT_THROW(parse_partial_map("1\n"), ParseError);
  EXPECT_THROW(parse_partial_map("1 2 3\n"), ParseError);
  EXPECT_THROW(parse_partial_map("1 2\n1 3\n"), ParseError);
}

}  // namespace
}  // namespace sixth
