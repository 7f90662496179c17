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

// Symmetrized relator sets, the C'(1/6) condition, Dehn's algorithm and the
// torsion test for sixth groups.

#ifndef SIXTH_PRESENTATION_H_
#define SIXTH_PRESENTATION_H_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "sixth/word.h"

namespace sixth {

inline constexpr std::size_t kDefaultDehnBudget = 10000;

// A defining relator base^exponent with base not a proper power. The base is
// the least rotation of itself or its inverse.
struct Root {
  Word base;
  std::uint32_t exponent = 0;

  auto operator<=>(const Root&) const = default;
};

class RelatorSet {
 public:
  RelatorSet() = default;

  // Smallest symmetrized set containing the cyclic cores of `seeds`.
  // Throws std::invalid_argument if a seed is trivial in the free group.
  static RelatorSet symmetrize(std::span<const Word> seeds);

  // Sorted and distinct.
  const std::vector<Word>& relators() const { return relators_; }
  const std::set<Root>& roots() const { return roots_; }
  std::size_t size() const { return relators_.size(); }
  bool contains(const Word& w) const;
  std::size_t max_length() const { return max_length_; }

  bool operator==(const RelatorSet& other) const {
    return relators_ == other.relators_ && roots_ == other.roots_;
  }

 private:
  std::vector<Word> relators_;
  std::set<Root> roots_;
  std::size_t max_length_ = 0;
};

// Nonempty maximal common prefixes of pairs of distinct relators, sorted.
std::vector<Word> pieces(const RelatorSet& r);
// 0 if there are no pieces.
std::size_t max_piece_length(const RelatorSet& r);
// Every piece u inside some relator r satisfies 6|u| < |r|.
bool check_c16(const RelatorSet& r);

class Presentation {
 public:
  Presentation() = default;
  // Throws std::invalid_argument if a seed uses a generator >= alphabet.
  Presentation(Generator alphabet, std::vector<Word> seeds);

  Generator alphabet_size() const { return alphabet_; }
  const std::vector<Word>& seeds() const { return seeds_; }
  const RelatorSet& relators() const { return relators_; }

  std::size_t dehn_budget() const { return dehn_budget_; }
  void set_dehn_budget(std::size_t steps) { dehn_budget_ = steps; }

  // Relator indices whose first letter has code `letter_code`.
  std::span<const std::size_t> starting_with(std::uint32_t letter_code) const;

 private:
  Generator alphabet_ = 0;
  std::vector<Word> seeds_;
  RelatorSet relators_;
  std::vector<std::vector<std::size_t>> by_first_;
  std::size_t dehn_budget_ = kDefaultDehnBudget;
};

// Dehn's algorithm. At each step the leftmost subword that is a prefix of
// more than half of some relator (longest at that position) is replaced by
// the inverse of the relator's remainder. Throws BudgetExceeded after
// p.dehn_budget() steps.
Word dehn_reduce(const Presentation& p, const Word& w);
bool is_identity(const Presentation& p, const Word& w);
bool equal(const Presentation& p, const Word& a, const Word& b);

// Cyclically reduces, then Dehn-reduces rotations until no rotation
// shortens. The result is conjugate to w.
Word cyclic_dehn_reduce(const Presentation& p, const Word& w);

class Order {
 public:
  static Order infinite() { return Order(0); }
  static Order finite(std::uint64_t n);

  bool is_finite() const { return value_ != 0; }
  // Throws std::logic_error on an infinite order.
  std::uint64_t value() const;

  bool operator==(const Order&) const = default;

 private:
  explicit Order(std::uint64_t v) : value_(v) {}
  std::uint64_t value_;
};

// "INFINITE" or the decimal value.
std::string format_order(Order o);

// Element order via the torsion theorem: a cyclically Dehn-reduced word of
// finite order is a rotation of u^k or u^-k for a root (u, n), and then its
// order is n / gcd(k, n).
Order order(const Presentation& p, const Word& w);

}  // namespace sixth

#endif  // SIXTH_PRESENTATION_H_
