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

// The random graph on {2, 3, ...} with m ~ n iff p_m | n or p_n | m, where
// p_0 = 2, p_1 = 3, p_2 = 5, ...
//
// For m < n we have p_n > n > m, so m ~ n iff p_m | n. Only p_min(m,n) is
// ever needed, and primes come from a lazily grown sieve capped at
// kPrimeIndexLimit entries; anything beyond throws LimitExceeded.

#ifndef SIXTH_RADO_H_
#define SIXTH_RADO_H_

#include <cstddef>
#include <cstdint>
#include <vector>

#include "sixth/graph.h"

namespace sixth {

using RadoVertex = std::uint64_t;

inline constexpr std::size_t kPrimeIndexLimit = 10'000'000;

// p_index. Thread-safe.
std::uint64_t nth_prime(std::size_t index);
// The index of prime q. Throws std::invalid_argument if q is not prime.
std::size_t prime_index(std::uint64_t q);

// Throws std::invalid_argument for vertices below 2 or m == n.
bool rado_adjacent(RadoVertex m, RadoVertex n);

// Least x >= 2 outside A and B adjacent to all of A and none of B.
// Throws std::invalid_argument if A and B meet.
RadoVertex extension_witness(const std::vector<RadoVertex>& a,
                             const std::vector<RadoVertex>& b);

// Greedy induced embedding: vertex v goes to the least witness for its
// earlier neighbours and non-neighbours.
std::vector<RadoVertex> embed_graph(const Graph& t);

// The subgraph induced on `values`, vertex i standing for values[i].
Graph rado_induced_subgraph(const std::vector<RadoVertex>& values);

}  // namespace sixth

#endif  // SIXTH_RADO_H_
