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

#include "sixth/graph.h"

#include <charconv>
#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "sixth/errors.h"

namespace sixth {

Graph Graph::from_edges(
    std::size_t n,
    const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
  Graph g(n);
  for (const auto& [i, j] : edges) g.add_edge(i, j);
  return g;
}

Graph Graph::complete(std::size_t n) {
  Graph g(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) g.add_edge(i, j);
  }
  return g;
}

Graph Graph::path(std::size_t n) {
  Graph g(n);
  for (std::size_t i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

void Graph::check_pair(std::size_t i, std::size_t j) const {
  if (i >= n_ || j >= n_) {
    throw std::invalid_argument("vertex out of range");
  }
  if (i == j) throw std::invalid_argument("loops are not allowed");
}

void Graph::add_edge(std::size_t i, std::size_t j) {
  check_pair(i, j);
  adj_[i * n_ + j] = adj_[j * n_ + i] = 1;
}

void Graph::remove_edge(std::size_t i, std::size_t j) {
  check_pair(i, j);
  adj_[i * n_ + j] = adj_[j * n_ + i] = 0;
}

std::vector<std::pair<std::size_t, std::size_t>> Graph::edges() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = i + 1; j < n_; ++j) {
      if (adjacent(i, j)) out.emplace_back(i, j);
    }
  }
  return out;
}

std::size_t Graph::edge_count() const { return edges().size(); }

std::size_t Graph::degree(std::size_t v) const {
  std::size_t d = 0;
  for (std::size_t u = 0; u < n_; ++u) d += adjacent(v, u) ? 1 : 0;
  return d;
}

Graph Graph::permuted(const Permutation& perm) const {
  if (perm.size() != n_) throw std::invalid_argument("permutation size");
  Graph g(n_);
  for (const auto& [i, j] : edges()) g.add_edge(perm[i], perm[j]);
  return g;
}

Graph Graph::induced(const std::vector<std::size_t>& vertices) const {
  Graph g(vertices.size());
  for (std::size_t a = 0; a < vertices.size(); ++a) {
    for (std::size_t b = a + 1; b < vertices.size(); ++b) {
      if (adjacent(vertices[a], vertices[b])) g.add_edge(a, b);
    }
  }
  return g;
}

namespace {

std::optional<std::size_t> to_index(std::string_view s) {
  std::size_t v = 0;
  const auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || end != s.data() + s.size()) return std::nullopt;
  if (s.size() > 1 && s[0] == '0') return std::nullopt;
  return v;
}

std::vector<std::string> split(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> out;
  for (std::string tok; in >> tok;) out.push_back(tok);
  return out;
}

}  // namespace

Graph parse_graph(std::istream& in) {
  std::optional<Graph> g;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto tokens = split(line);
    if (tokens.empty() || tokens[0][0] == '#') continue;
    if (tokens[0] == "n") {
      if (g) throw ParseError("repeated vertex count line", lineno);
      const auto n = tokens.size() == 2 ? to_index(tokens[1]) : std::nullopt;
      if (!n) throw ParseError("expected 'n <count>'", lineno);
      g.emplace(*n);
    } else if (tokens[0] == "e") {
      if (!g) throw ParseError("edge before vertex count", lineno);
      const auto i = tokens.size() == 3 ? to_index(tokens[1]) : std::nullopt;
      const auto j = tokens.size() == 3 ? to_index(tokens[2]) : std::nullopt;
      if (!i || !j) throw ParseError("expected 'e <i> <j>'", lineno);
      if (!(*i < *j && *j < g->size())) {
        throw ParseError("edge needs i < j < n", lineno);
      }
      if (g->adjacent(*i, *j)) throw ParseError("duplicate edge", lineno);
      g->add_edge(*i, *j);
    } else {
      throw ParseError("unknown line '" + tokens[0] + "'", lineno);
    }
  }
  if (!g) throw ParseError("missing vertex count line", lineno);
  return *g;
}

Graph parse_graph(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_graph(in);
}

Graph read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return parse_graph(in);
}

std::string format_graph(const Graph& g) {
  std::string out = "n " + std::to_string(g.size()) + "\n";
  for (const auto& [i, j] : g.edges()) {
    out += "e " + std::to_string(i) + " " + std::to_string(j) + "\n";
  }
  return out;
}

}  // namespace sixth
