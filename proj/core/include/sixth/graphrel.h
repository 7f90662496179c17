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

// Brute-force graph relations: induced embedding, isomorphism, automorphism
// groups, rigidity and trees. Everything here is exponential and meant for
// graphs with a handful of vertices.

#ifndef SIXTH_GRAPHREL_H_
#define SIXTH_GRAPHREL_H_

#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

#include "sixth/graph.h"

namespace sixth {

// Calls fn on every injection {0..k-1} -> {0..n-1} in lexicographic order
// until fn returns false.
void for_each_injection(std::size_t k, std::size_t n,
                        const std::function<bool(const std::vector<std::size_t>&)>& fn);

// Lexicographically least f with T.adj(i,j) <=> S.adj(f(i),f(j)).
std::optional<std::vector<std::size_t>> induced_embeds(const Graph& t,
                                                       const Graph& s);
// Least isomorphism t -> s.
std::optional<Permutation> graph_iso(const Graph& t, const Graph& s);

bool is_automorphism(const Graph& t, const Permutation& perm);
// Aut(t) in lexicographic order; the identity comes first.
std::vector<Permutation> automorphisms(const Graph& t);
bool is_rigid(const Graph& t);
bool is_combinatorial_tree(const Graph& t);

// All 2^(n choose 2) labelled graphs on n vertices, by edge bitmask.
std::vector<Graph> all_graphs(std::size_t n);
// The first graph of each isomorphism class among all_graphs(n).
std::vector<Graph> nonisomorphic_graphs(std::size_t n);

}  // namespace sixth

#endif  // SIXTH_GRAPHREL_H_
