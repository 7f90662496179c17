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

#include <random>
#include <vector>

#include "benchmark/benchmark.h"
#include "sixth/graph.h"
#include "sixth/presentation.h"
#include "sixth/williams.h"
#include "sixth/word.h"

namespace sixth {
namespace {

Graph RandomGraph(std::size_t n, std::mt19937& rng) {
  Graph g(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (rng() % 2) g.add_edge(i, j);
    }
  }
  return g;
}

// Products of conjugated relators: trivial words of controlled length.
std::vector<Word> TrivialWords(const Presentation& p, std::size_t count,
                               std::size_t factors, std::mt19937& rng) {
  const auto& rel = p.relators().relators();
  std::vector<Word> out;
  for (std::size_t k = 0; k < count; ++k) {
    Word w;
    for (std::size_t f = 0; f < factors; ++f) {
      Word c;
      for (int l = 0; l < 3; ++l) {
        c = c * Word::generator_power(
                    static_cast<Generator>(rng() % p.alphabet_size()),
                    rng() % 2 ? 1 : -1);
      }
      w = w * c * rel[rng() % rel.size()] * invert(c);
    }
    out.push_back(w);
  }
  return out;
}

void BM_DehnReduceTrivial(benchmark::State& state) {
  std::mt19937 rng(1);
  const Presentation p = williams_presentation(RandomGraph(6, rng));
  const auto words =
      TrivialWords(p, 64, static_cast<std::size_t>(state.range(0)), rng);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(dehn_reduce(p, words[i++ % words.size()]));
  }
}
BENCHMARK(BM_DehnReduceTrivial)->Arg(1)->Arg(4)->Arg(16);

void BM_OrderOfPairProduct(benchmark::State& state) {
  std::mt19937 rng(2);
  const Presentation p = williams_presentation(RandomGraph(5, rng));
  for (auto _ : state) {
    benchmark::DoNotOptimize(order(p, Word::generator_power(0, 1) *
                                          Word::generator_power(3, 1)));
  }
}
BENCHMARK(BM_OrderOfPairProduct);

void BM_CheckC16(benchmark::State& state) {
  std::mt19937 rng(3);
  const Presentation p = williams_presentation(
      RandomGraph(static_cast<std::size_t>(state.range(0)), rng));
  for (auto _ : state) benchmark::DoNotOptimize(check_c16(p.relators()));
}
BENCHMARK(BM_CheckC16)->Arg(3)->Arg(5);

}  // namespace
}  // namespace sixth

BENCHMARK_MAIN();
