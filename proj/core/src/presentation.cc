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

#include "sixth/presentation.h"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "sixth/errors.h"

namespace sixth {
namespace {

std::size_t common_prefix(std::span<const Letter> a, std::span<const Letter> b) {
  const std::size_t n = std::min(a.size(), b.size());
  std::size_t k = 0;
  while (k < n && a[k] == b[k]) ++k;
  return k;
}

// Splits a nonempty cyclically reduced word as u^m with u primitive.
Root primitive_root(const Word& c) {
  const std::size_t n = c.size();
  for (std::size_t p = 1; p <= n; ++p) {
    if (n % p != 0) continue;
    if (p < n && rotate(c, p) != c) continue;
    const Word u = subword(c, 0, p);
    Word best = u;
    for (const Word& candidate : {u, invert(u)}) {
      for (std::size_t k = 0; k < p; ++k) {
        best = std::min(best, rotate(candidate, k));
      }
    }
    return {best, static_cast<std::uint32_t>(n / p)};
  }
  return {c, 1};  // unreachable: p = n always qualifies
}

}  // namespace

RelatorSet RelatorSet::symmetrize(std::span<const Word> seeds) {
  RelatorSet out;
  for (const Word& seed : seeds) {
    const Word core = cyclic_reduce(seed).core;
    if (core.empty()) {
      throw std::invalid_argument("seed " + format_word(seed) +
                                  " is trivial in the free group");
    }
    out.roots_.insert(primitive_root(core));
  }
  std::set<Word> all;
  for (const Root& root : out.roots_) {
    for (const Word& base : {root.base, invert(root.base)}) {
      for (const Word& r :
           cyclic_permutations(power(base, static_cast<int>(root.exponent)))) {
        all.insert(r);
      }
    }
  }
  out.relators_.assign(all.begin(), all.end());
  for (const Word& r : out.relators_) {
    out.max_length_ = std::max(out.max_length_, r.size());
  }
  return out;
}

bool RelatorSet::contains(const Word& w) const {
  return std::binary_search(relators_.begin(), relators_.end(), w);
}

std::vector<Word> pieces(const RelatorSet& r) {
  // In sorted order the longest common prefix of any pair is the shortest
  // adjacent one between them, so adjacent pairs give every piece.
  const auto& rel = r.relators();
  std::set<Word> out;
  for (std::size_t i = 0; i + 1 < rel.size(); ++i) {
    const std::size_t k = common_prefix(rel[i].letters(), rel[i + 1].letters());
    if (k > 0) out.insert(subword(rel[i], 0, k));
  }
  return {out.begin(), out.end()};
}

std::size_t max_piece_length(const RelatorSet& r) {
  std::size_t best = 0;
  for (const Word& u : pieces(r)) best = std::max(best, u.size());
  return best;
}

bool check_c16(const RelatorSet& r) {
  for (const Word& u : pieces(r)) {
    for (const Word& rel : r.relators()) {
      if (6 * u.size() >= rel.size() && contains_subword(rel, u)) return false;
    }
  }
  return true;
}

Presentation::Presentation(Generator alphabet, std::vector<Word> seeds)
    : alphabet_(alphabet), seeds_(std::move(seeds)) {
  for (const Word& s : seeds_) {
    if (s.alphabet_bound() > alphabet_) {
      throw std::invalid_argument("seed " + format_word(s) +
                                  " uses a generator outside the alphabet");
    }
  }
  relators_ = RelatorSet::symmetrize(seeds_);
  by_first_.assign(2 * static_cast<std::size_t>(alphabet_), {});
  for (std::size_t i = 0; i < relators_.size(); ++i) {
    by_first_[relators_.relators()[i].front().code()].push_back(i);
  }
}

std::span<const std::size_t> Presentation::starting_with(
    std::uint32_t letter_code) const {
  if (letter_code >= by_first_.size()) return {};
  return by_first_[letter_code];
}

Word dehn_reduce(const Presentation& p, const Word& w) {
  const auto& rel = p.relators().relators();
  const std::size_t window = p.relators().max_length();
  std::vector<Letter> cur(w.begin(), w.end());
  std::size_t start = 0;
  std::size_t steps = 0;
  while (true) {
    std::size_t pos = cur.size();
    std::size_t best_len = 0;
    const Word* best = nullptr;
    for (std::size_t i = start; i < cur.size() && best == nullptr; ++i) {
      const std::span<const Letter> tail(cur.data() + i, cur.size() - i);
      for (const std::size_t ri : p.starting_with(cur[i].code())) {
        const Word& r = rel[ri];
        const std::size_t k = common_prefix(tail, r.letters());
        if (2 * k > r.size() && k > best_len) {
          best_len = k;
          best = &r;
        }
      }
      if (best != nullptr) pos = i;
    }
    if (best == nullptr) return Word(cur);
    if (++steps > p.dehn_budget()) {
      throw BudgetExceeded("Dehn reduction of " + format_word(w) +
                           " exceeded " + std::to_string(p.dehn_budget()) +
                           " steps");
    }
    std::vector<Letter> next(cur.begin(), cur.begin() + pos);
    for (std::size_t j = best->size(); j > best_len; --j) {
      next.push_back((*best)[j - 1].inverse());
    }
    next.insert(next.end(), cur.begin() + pos + best_len, cur.end());
    const Word reduced(next);
    const std::size_t kept = common_prefix(cur, reduced.letters());
    start = kept > window ? kept - window : 0;
    cur.assign(reduced.begin(), reduced.end());
  }
}

bool is_identity(const Presentation& p, const Word& w) {
  return dehn_reduce(p, w).empty();
}

bool equal(const Presentation& p, const Word& a, const Word& b) {
  return is_identity(p, a * invert(b));
}

Word cyclic_dehn_reduce(const Presentation& p, const Word& w) {
  Word cur = cyclic_reduce(dehn_reduce(p, w)).core;
  bool changed = true;
  while (changed && !cur.empty()) {
    changed = false;
    for (std::size_t k = 0; k < cur.size(); ++k) {
      const Word d = dehn_reduce(p, rotate(cur, k));
      if (d.size() < cur.size()) {
        cur = cyclic_reduce(d).core;
        changed = true;
        break;
      }
    }
  }
  return cur;
}

Order Order::finite(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("finite order must be positive");
  return Order(n);
}

std::uint64_t Order::value() const {
  if (!is_finite()) throw std::logic_error("order is infinite");
  return value_;
}

std::string format_order(Order o) {
  return o.is_finite() ? std::to_string(o.value()) : "INFINITE";
}

Order order(const Presentation& p, const Word& w) {
  const Word core = cyclic_dehn_reduce(p, w);
  if (core.empty()) return Order::finite(1);
  for (const Root& root : p.relators().roots()) {
    const std::size_t len = root.base.size();
    if (core.size() % len != 0) continue;
    const auto k = static_cast<std::uint32_t>(core.size() / len);
    for (const Word& base : {root.base, invert(root.base)}) {
      const Word target = power(base, static_cast<int>(k));
      for (std::size_t r = 0; r < len; ++r) {
        if (rotate(target, r) == core) {
          return Order::finite(root.exponent / std::gcd(k, root.exponent));
        }
      }
    }
  }
  return Order::infinite();
}

}  // namespace sixth
