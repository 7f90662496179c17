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

#include "sixth/graphrel.h"

#include <numeric>
#include <stdexcept>

namespace sixth {
namespace {

bool extend(std::size_t k, std::size_t n, std::vector<std::size_t>& f,
            std::vector<char>& used,
            const std::function<bool(const std::vector<std::size_t>&)>& fn) {
  if (f.size() == k) return fn(f);
  for (std::size_t v = 0; v < n; ++v) {
    if (used[v]) continue;
    used[v] = 1;
    f.push_back(v);
    const bool go_on = extend(k, n, f, used, fn);
    f.pop_back();
    used[v] = 0;
    if (!go_on) return false;
  }
  return true;
}

bool preserves_adjacency(const Graph& t, const Graph& s,
                         const std::vector<std::size_t>& f) {
  for (std::size_t i = 0; i < t.size(); ++i) {
    for (std::size_t j = i + 1; j < t.size(); ++j) {
      if (t.adjacent(i, j) != s.adjacent(f[i], f[j])) return false;
    }
  }
  return true;
}

}  // namespace

void for_each_injection(
    std::size_t k, std::size_t n,
    const std::function<bool(const std::vector<std::size_t>&)>& fn) {
  if (k > n) return;
  std::vector<std::size_t> f;
  f.reserve(k);
  std::vector<char> used(n, 0);
  extend(k, n, f, used, fn);
}

std::optional<std::vector<std::size_t>> induced_embeds(const Graph& t,
                                                       const Graph& s) {
  std::optional<std::vector<std::size_t>> found;
  for_each_injection(t.size(), s.size(), [&](const auto& f) {
    if (!preserves_adjacency(t, s, f)) return true;
    found = f;
    return false;
  });
  return found;
}

std::optional<Permutation> graph_iso(const Graph& t, const Graph& s) {
  if (t.size() != s.size() || t.edge_count() != s.edge_count()) {
    return std::nullopt;
  }
  return induced_embeds(t, s);
}

bool is_automorphism(const Graph& t, const Permutation& perm) {
  if (perm.size() != t.size()) return false;
  std::vector<char> seen(t.size(), 0);
  for (const std::size_t v : perm) {
    if (v >= t.size() || seen[v]) return false;
    seen[v] = 1;
  }
  return preserves_adjacency(t, t, perm);
}

std::vector<Permutation> automorphisms(const Graph& t) {
  std::vector<Permutation> out;
  for_each_injection(t.size(), t.size(), [&](const auto& f) {
    if (preserves_adjacency(t, t, f)) out.push_back(f);
    return true;
  });
  return out;
}

bool is_rigid(const Graph& t) {
  bool rigid = true;
  for_each_injection(t.size(), t.size(), [&](const auto& f) {
    for (std::size_t i = 0; i < f.size(); ++i) {
      if (f[i] != i) {
        if (preserves_adjacency(t, t, f)) {
          rigid = false;
          return false;
        }
        break;
      }
    }
    return true;
  });
  return rigid;
}

bool is_combinatorial_tree(const Graph& t) {
  if (t.size() == 0 || t.edge_count() != t.size() - 1) return false;
  std::vector<char> seen(t.size(), 0);
  std::vector<std::size_t> stack{0};
  seen[0] = 1;
  std::size_t reached = 1;
  while (!stack.empty()) {
    const std::size_t v = stack.back();
    stack.pop_back();
    for (std::size_t u = 0; u < t.size(); ++u) {
      if (t.adjacent(v, u) && !seen[u]) {
        seen[u] = 1;
        ++reached;
        stack.push_back(u);
      }
    }
  }
  return reached == t.size();
}

std::vector<Graph> all_graphs(std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> slots;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) slots.emplace_back(i, j);
  }
  if (slots.size() >= 24) throw std::invalid_argument("too many vertices");
  std::vector<Graph> out;
  for (std::size_t mask = 0; mask < (std::size_t{1} << slots.size()); ++mask) {
    Graph g(n);
    for (std::size_t b = 0; b < slots.size(); ++b) {
      if (mask >> b & 1) g.add_edge(slots[b].first, slots[b].second);
    }
    out.push_back(std::move(g));
  }
  return out;
}

std::vector<Graph> nonisomorphic_graphs(std::size_t n) {
  std::vector<Graph> reps;
  for (Graph& g : all_graphs(n)) {
    bool fresh = true;
    for (const Graph& r : reps) {
      if (graph_iso(g, r)) {
        fresh = false;
        break;
      }
    }
    if (fresh) reps.push_back(std::move(g));
  }
  return reps;
}

}  // namespace sixth
