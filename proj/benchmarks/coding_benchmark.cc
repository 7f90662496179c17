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

#include "benchmark/benchmark.h"
#include "sixth/aut_extension.h"
#include "sixth/coding.h"
#include "sixth/graph.h"

namespace sixth {
namespace {

void BM_EnumerateCodes(benchmark::State& state) {
  for (auto _ : state) {
    CodingTable table(Graph::path(3));
    table.extend_to_code(static_cast<Code>(state.range(0)));
    benchmark::DoNotOptimize(table.size());
  }
}
BENCHMARK(BM_EnumerateCodes)->Arg(200)->Arg(2000);

void BM_ExtensionCheck(benchmark::State& state) {
  CodingTable table(Graph::path(3));
  AutExtensionChecker checker(table, 2);
  const PartialMap s({{1, 7}, {4, 4}, {6, 12}});
  for (auto _ : state) benchmark::DoNotOptimize(checker.check(s).nonempty);
}
BENCHMARK(BM_ExtensionCheck);

void BM_OracleCheck(benchmark::State& state) {
  CodingTable table(Graph::path(3));
  CanonicalAutOracle oracle(table, 2);
  const PartialMap s({{1, 7}, {4, 4}, {6, 12}});
  for (auto _ : state) benchmark::DoNotOptimize(oracle.extends(s));
}
BENCHMARK(BM_OracleCheck);

}  // namespace
}  // namespace sixth
