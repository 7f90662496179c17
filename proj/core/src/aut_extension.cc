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

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "sixth/graphrel.h"

namespace sixth {
namespace {

constexpr Code kUnknown = std::numeric_limits<Code>::max();
constexpr Code kNone = kUnknown - 1;

}  // namespace

std::size_t default_extension_bound(CodingTable& table, const PartialMap& s) {
  std::size_t max_len = 0;
  bool any_generator = false;
  for (const auto& [arg, value] : s.pairs()) {
    if (arg % 3 != 1) continue;
    any_generator = true;
    max_len = std::max(max_len, table.word_of(value).size());
  }
  if (!any_generator) {
    for (const auto& pr : s.pairs()) {
      max_len = std::max(max_len, table.word_of(pr.second).size());
    }
  }
  return max_len == 0 ? 0 : (max_len - 1) / 2;
}

AutExtensionChecker::AutExtensionChecker(CodingTable& table, std::size_t bound,
                                         ExtensionMode mode)
    : table_(table), bound_(bound), mode_(mode) {
  const Graph& g = table_.graph();
  const auto autos = automorphisms(g);
  for (const Word& t : reduced_words(g.size(), bound_)) {
    for (const Permutation& rho : autos) {
      for (const int epsilon : {1, -1}) {
        candidates_.push_back(
            {t, rho, epsilon, induced_hom(g, g, rho, epsilon, t)});
      }
    }
  }
  images_.resize(candidates_.size());
}

bool AutExtensionChecker::register_codes(const PartialMap& s) {
  try {
    for (const auto& [arg, value] : s.pairs()) {
      if (!table_.in_code_space(arg) || !table_.in_code_space(value)) {
        return false;
      }
      table_.word_of(arg);
      table_.word_of(value);
    }
  } catch (const std::out_of_range&) {
    return false;
  }
  return true;
}

void AutExtensionChecker::refresh_caches() {
  const std::size_t size = table_.size();
  if (size == table_size_seen_) return;
  // Lookups that failed may succeed against the larger table.
  for (auto& row : images_) {
    std::replace(row.begin(), row.end(), kNone, kUnknown);
  }
  for (auto& [n, row] : products_) {
    std::erase_if(row, [](const auto& kv) { return kv.second == kNone; });
  }
  table_size_seen_ = size;
}

Code AutExtensionChecker::lookup(const Word& w) const {
  return table_.find_code(w).value_or(kNone);
}

Code AutExtensionChecker::image(std::size_t candidate, Code c) {
  auto& row = images_[candidate];
  if (c >= row.size()) row.resize(c + 1, kUnknown);
  if (row[c] == kUnknown) {
    row[c] = lookup(candidates_[candidate].map.apply(*table_.find_word(c)));
  }
  return row[c];
}

Code AutExtensionChecker::product(Code n, Code m) {
  auto& row = products_[n];
  if (const auto it = row.find(m); it != row.end()) return it->second;
  const Code c = lookup(*table_.find_word(n) * *table_.find_word(m));
  row.emplace(m, c);
  return c;
}

ExtensionResult AutExtensionChecker::check(const PartialMap& s) {
  ExtensionResult res;
  res.bound = bound_;
  if (!register_codes(s)) {
    res.reason = "a code lies outside the code space";
    return res;
  }
  refresh_caches();

  for (const auto& [n, sn] : s.pairs()) {
    for (const auto& [m, sm] : s.pairs()) {
      const Code nm = product(n, m);
      if (nm == kNone) continue;
      const auto snm = s.at(nm);
      if (snm && product(sn, sm) != *snm) {
        res.reason = "condition (1) fails at n=" + std::to_string(n) +
                     ", m=" + std::to_string(m);
        return res;
      }
    }
  }

  std::vector<std::pair<std::size_t, Code>> gens;
  for (const auto& [arg, value] : s.pairs()) {
    if (arg % 3 == 1) gens.emplace_back((arg - 1) / 3, value);
  }
  const std::size_t n = table_.graph().size();
  if (mode_ == ExtensionMode::kLiteral && gens.empty()) {
    Permutation id(n);
    std::iota(id.begin(), id.end(), 0);
    res.nonempty = true;
    res.witness = ExtensionWitness{{}, id, 0, 0, 0, Word()};
    res.reason = "no generator code in the domain";
    return res;
  }

  for (std::size_t ci = 0; ci < candidates_.size(); ++ci) {
    bool ok = true;
    for (const auto& [i, value] : gens) {
      if (image(ci, generator_code(static_cast<Generator>(i))) != value) {
        ok = false;
        break;
      }
    }
    if (ok && mode_ == ExtensionMode::kVerified) {
      for (const auto& [arg, value] : s.pairs()) {
        if (image(ci, arg) != value) {
          ok = false;
          break;
        }
      }
    }
    if (!ok) continue;
    const Candidate& c = candidates_[ci];
    ExtensionWitness w;
    for (const auto& pr : gens) w.r.emplace_back(pr.first, c.rho[pr.first]);
    w.rho = c.rho;
    w.l = c.epsilon == 1 ? 0 : 1;
    w.t = c.t;
    w.k = table_.code_of(c.t);
    w.k_inverse = table_.code_of(invert(c.t));
    res.nonempty = true;
    res.at_bound = bound_ > 0 && c.t.size() == bound_;
    res.witness = std::move(w);
    res.reason = "witness found";
    return res;
  }
  res.bound_exhausted = true;
  res.reason = "no (rho, l, t) with |t| <= " + std::to_string(bound_);
  return res;
}

ExtensionResult sigma_ns_nonempty(const Graph& t, const PartialMap& s,
                                  std::optional<std::size_t> bound,
                                  ExtensionMode mode) {
  CodingTable table(t);
  std::size_t b = 0;
  if (bound) {
    b = *bound;
  } else {
    try {
      b = default_extension_bound(table, s);
    } catch (const std::out_of_range&) {
      b = 0;  // check() reports the bad code
    }
  }
  AutExtensionChecker checker(table, b, mode);
  return checker.check(s);
}

CanonicalAutOracle::CanonicalAutOracle(CodingTable& table, std::size_t bound)
    : table_(table) {
  const Graph& g = table_.graph();
  const auto rhos = automorphisms(g);
  for (const Word& t : reduced_words(g.size(), bound)) {
    for (const Permutation& rho : rhos) {
      for (const int epsilon : {1, -1}) {
        autos_.push_back({rho, epsilon, t});
        maps_.push_back(induced_map(g, autos_.back()));
      }
    }
  }
  cache_.resize(autos_.size());
}

std::size_t CanonicalAutOracle::slot(Code c) {
  if (const auto it = slots_.find(c); it != slots_.end()) return it->second;
  slot_words_.push_back(table_.word_of(c));
  slots_.emplace(c, slot_words_.size() - 1);
  return slot_words_.size() - 1;
}

bool CanonicalAutOracle::sends(std::size_t candidate, std::size_t from,
                               std::size_t to) {
  auto& rows = cache_[candidate];
  if (rows.size() <= from) rows.resize(from + 1);
  auto& row = rows[from];
  if (row.size() <= to) row.resize(to + 1, -1);
  if (row[to] < 0) {
    row[to] = equal(table_.presentation(),
                    maps_[candidate].apply(slot_words_[from]),
                    slot_words_[to])
                  ? 1
                  : 0;
  }
  return row[to] == 1;
}

std::optional<CanonicalAuto> CanonicalAutOracle::find(const PartialMap& s) {
  std::vector<std::pair<std::size_t, std::size_t>> slotted;
  try {
    for (const auto& [arg, value] : s.pairs()) {
      if (!table_.in_code_space(arg) || !table_.in_code_space(value)) {
        return std::nullopt;
      }
      slotted.emplace_back(slot(arg), slot(value));
    }
  } catch (const std::out_of_range&) {
    return std::nullopt;
  }
  for (std::size_t ci = 0; ci < autos_.size(); ++ci) {
    bool ok = true;
    for (const auto& [from, to] : slotted) {
      if (!sends(ci, from, to)) {
        ok = false;
        break;
      }
    }
    if (ok) return autos_[ci];
  }
  return std::nullopt;
}

bool oracle_aut_extends(const Graph& t, const PartialMap& s, std::size_t bound) {
  CodingTable table(t);
  CanonicalAutOracle oracle(table, bound);
  return oracle.extends(s);
}

}  // namespace sixth
