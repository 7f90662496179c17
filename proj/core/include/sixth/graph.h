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

// Finite simple graphs on vertices 0..n-1 and their text format:
//
//   # comment
//   n 3
//   e 0 1
//   e 1 2
//
// Edge lines need i < j < n; duplicates are rejected.

#ifndef SIXTH_GRAPH_H_
#define SIXTH_GRAPH_H_

#include <cstddef>
#include <istream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace sixth {

// perm[i] is the image of vertex i.
using Permutation = std::vector<std::size_t>;

class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t n) : n_(n), adj_(n * n, 0) {}

  static Graph from_edges(std::size_t n,
                          const std::vector<std::pair<std::size_t, std::size_t>>&
                              edges);
  static Graph complete(std::size_t n);
  static Graph path(std::size_t n);
  static Graph empty(std::size_t n) { return Graph(n); }

  std::size_t size() const { return n_; }
  bool adjacent(std::size_t i, std::size_t j) const {
    return adj_[i * n_ + j] != 0;
  }
  // Throws std::invalid_argument on loops or out-of-range vertices.
  void add_edge(std::size_t i, std::size_t j);
  void remove_edge(std::size_t i, std::size_t j);

  // Pairs (i, j) with i < j in lexicographic order.
  std::vector<std::pair<std::size_t, std::size_t>> edges() const;
  std::size_t edge_count() const;
  std::size_t degree(std::size_t v) const;

  // The graph with vertex i renamed perm[i].
  Graph permuted(const Permutation& perm) const;
  // Induced subgraph on `vertices`, relabelled 0..k-1 in the given order.
  Graph induced(const std::vector<std::size_t>& vertices) const;

  bool operator==(const Graph&) const = default;

 private:
  void check_pair(std::size_t i, std::size_t j) const;

  std::size_t n_ = 0;
  std::vector<char> adj_;
};

// Throws ParseError carrying the 1-based line number.
Graph parse_graph(std::istream& in);
Graph parse_graph(std::string_view text);
Graph read_graph_file(const std::string& path);
std::string format_graph(const Graph& g);

}  // namespace sixth

#endif  // SIXTH_GRAPH_H_
