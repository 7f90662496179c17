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

// Words in the free group on generators v_0, v_1, ...
//
// A Letter is a generator or its inverse. Letters are totally ordered by
// (index, sign) with the positive letter first, so the order reads
//   v_0 < v_0^-1 < v_1 < v_1^-1 < ...
// and this order drives shortlex enumeration in the coding module.
//
// A Word always holds a freely reduced letter sequence. The text form is a
// whitespace-separated list of tokens `g<i>` (v_i), `G<i>` (v_i^-1), or the
// lone token `e` for the identity.

#ifndef SIXTH_WORD_H_
#define SIXTH_WORD_H_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace sixth {

using Generator = std::uint32_t;

class Letter {
 public:
  constexpr Letter() = default;
  constexpr Letter(Generator index, int sign)
      : code_(2 * index + (sign < 0 ? 1u : 0u)) {}

  static constexpr Letter positive(Generator index) { return {index, +1}; }
  static constexpr Letter negative(Generator index) { return {index, -1}; }
  static constexpr Letter from_code(std::uint32_t code) {
    Letter l;
    l.code_ = code;
    return l;
  }

  constexpr Generator index() const { return code_ >> 1; }
  constexpr int sign() const { return (code_ & 1u) ? -1 : +1; }
  constexpr bool is_positive() const { return (code_ & 1u) == 0; }
  // Dense code 2*index + (sign < 0); its natural order is the letter order.
  constexpr std::uint32_t code() const { return code_; }
  constexpr Letter inverse() const { return from_code(code_ ^ 1u); }

  constexpr auto operator<=>(const Letter&) const = default;

 private:
  std::uint32_t code_ = 0;
};

class Word {
 public:
  Word() = default;
  // Freely reduces `letters`.
  explicit Word(std::span<const Letter> letters);
  Word(std::initializer_list<Letter> letters);

  // v_i^power, power may be negative.
  static Word generator_power(Generator index, int power);

  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  const Letter& operator[](std::size_t i) const { return letters_[i]; }
  const Letter& front() const { return letters_.front(); }
  const Letter& back() const { return letters_.back(); }
  auto begin() const { return letters_.begin(); }
  auto end() const { return letters_.end(); }
  std::span<const Letter> letters() const { return letters_; }

  // Largest generator index plus one; 0 for the identity.
  Generator alphabet_bound() const;

  // Lexicographic on letters; see shortlex_less for the enumeration order.
  auto operator<=>(const Word&) const = default;
  bool operator==(const Word&) const = default;

 private:
  struct Reduced {};
  Word(Reduced, std::vector<Letter> letters) : letters_(std::move(letters)) {}
  friend Word reduce(std::span<const Letter> raw);

  std::vector<Letter> letters_;
};

struct WordHash {
  std::size_t operator()(const Word& w) const;
};

// Free reduction; the result does not depend on cancellation order.
Word reduce(std::span<const Letter> raw);
Word invert(const Word& w);
Word concat(const Word& a, const Word& b);
Word operator*(const Word& a, const Word& b);
// w^k for any integer k.
Word power(const Word& w, int k);

// Contiguous factor letters [pos, pos + len), freely reduced by construction.
Word subword(const Word& w, std::size_t pos, std::size_t len);
bool contains_subword(const Word& haystack, const Word& needle);
// Rotation that starts at letter `k` (k taken modulo |w|).
Word rotate(const Word& w, std::size_t k);

bool shortlex_less(const Word& a, const Word& b);

bool is_cyclically_reduced(const Word& w);

struct CyclicReduction {
  Word core;
  Word conjugator;
};
// w == conjugator * core * conjugator^-1 with core cyclically reduced.
CyclicReduction cyclic_reduce(const Word& w);

// All distinct rotations of a cyclically reduced word, sorted.
// Throws std::invalid_argument otherwise.
std::vector<Word> cyclic_permutations(const Word& w);

// All reduced words over v_0..v_{alphabet-1} of length <= max_length in
// shortlex order.
std::vector<Word> reduced_words(std::size_t alphabet, std::size_t max_length);

// Throws ParseError (token index) on anything but g<i>, G<i>, or a lone e.
Word parse_word(std::string_view text);
std::string format_word(const Word& w);
std::string format_letter(Letter l);

}  // namespace sixth

#endif  // SIXTH_WORD_H_
