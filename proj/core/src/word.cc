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

#include "sixth/word.h"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <stdexcept>

#include "sixth/errors.h"

namespace sixth {

Word::Word(std::span<const Letter> letters) : Word(reduce(letters)) {}

Word::Word(std::initializer_list<Letter> letters)
    : Word(std::span<const Letter>(letters.begin(), letters.size())) {}

Word Word::generator_power(Generator index, int power) {
  const Letter l =
      power >= 0 ? Letter::positive(index) : Letter::negative(index);
  const std::size_t n = static_cast<std::size_t>(power >= 0 ? power : -power);
  return Word(Reduced{}, std::vector<Letter>(n, l));
}

Generator Word::alphabet_bound() const {
  Generator bound = 0;
  for (const Letter l : letters_) bound = std::max(bound, l.index() + 1);
  return bound;
}

std::size_t WordHash::operator()(const Word& w) const {
  // FNV-1a over letter codes.
  std::size_t h = 1469598103934665603ull;
  for (const Letter l : w) {
    h ^= l.code();
    h *= 1099511628211ull;
  }
  return h;
}

Word reduce(std::span<const Letter> raw) {
  std::vector<Letter> out;
  out.reserve(raw.size());
  for (const Letter l : raw) {
    if (!out.empty() && out.back() == l.inverse()) {
      out.pop_back();
    } else {
      out.push_back(l);
    }
  }
  return Word(Word::Reduced{}, std::move(out));
}

Word invert(const Word& w) {
  std::vector<Letter> out;
  out.reserve(w.size());
  for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it) {
    out.push_back(it->inverse());
  }
  return reduce(out);
}

Word concat(const Word& a, const Word& b) {
  std::vector<Letter> raw;
  raw.reserve(a.size() + b.size());
  raw.insert(raw.end(), a.begin(), a.end());
  raw.insert(raw.end(), b.begin(), b.end());
  return reduce(raw);
}

Word operator*(const Word& a, const Word& b) { return concat(a, b); }

Word power(const Word& w, int k) {
  const Word base = k >= 0 ? w : invert(w);
  const int n = k >= 0 ? k : -k;
  std::vector<Letter> raw;
  raw.reserve(base.size() * static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) raw.insert(raw.end(), base.begin(), base.end());
  return reduce(raw);
}

Word subword(const Word& w, std::size_t pos, std::size_t len) {
  if (pos > w.size() || len > w.size() - pos) {
    throw std::out_of_range("subword range exceeds word length");
  }
  return reduce(w.letters().subspan(pos, len));
}

bool contains_subword(const Word& haystack, const Word& needle) {
  return std::search(haystack.begin(), haystack.end(), needle.begin(),
                     needle.end()) != haystack.end();
}

Word rotate(const Word& w, std::size_t k) {
  if (w.empty()) return w;
  k %= w.size();
  std::vector<Letter> raw(w.begin() + static_cast<std::ptrdiff_t>(k), w.end());
  raw.insert(raw.end(), w.begin(), w.begin() + static_cast<std::ptrdiff_t>(k));
  return reduce(raw);
}

bool shortlex_less(const Word& a, const Word& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

bool is_cyclically_reduced(const Word& w) {
  return w.size() < 2 || w.front() != w.back().inverse();
}

CyclicReduction cyclic_reduce(const Word& w) {
  std::size_t lo = 0;
  std::size_t hi = w.size();
  while (hi - lo >= 2 && w[lo] == w[hi - 1].inverse()) {
    ++lo;
    --hi;
  }
  return {subword(w, lo, hi - lo), subword(w, 0, lo)};
}

std::vector<Word> cyclic_permutations(const Word& w) {
  if (!is_cyclically_reduced(w)) {
    throw std::invalid_argument("cyclic_permutations: " + format_word(w) +
                                " is not cyclically reduced");
  }
  if (w.empty()) return {w};
  std::vector<Word> out;
  out.reserve(w.size());
  for (std::size_t k = 0; k < w.size(); ++k) out.push_back(rotate(w, k));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<Word> reduced_words(std::size_t alphabet, std::size_t max_length) {
  std::vector<Word> out{Word()};
  std::size_t level_begin = 0;
  for (std::size_t len = 1; len <= max_length; ++len) {
    const std::size_t level_end = out.size();
    for (std::size_t i = level_begin; i < level_end; ++i) {
      for (std::uint32_t c = 0; c < 2 * alphabet; ++c) {
        const Letter l = Letter::from_code(c);
        const Word& prefix = out[i];
        if (!prefix.empty() && prefix.back() == l.inverse()) continue;
        std::vector<Letter> raw(prefix.begin(), prefix.end());
        raw.push_back(l);
        out.push_back(reduce(raw));
      }
    }
    level_begin = level_end;
  }
  return out;
}

namespace {

bool is_space(char c) {
  return std::isspace(static_cast<unsigned char>(c)) != 0;
}

Letter parse_token(std::string_view token, std::size_t position) {
  if (token.size() < 2 || (token[0] != 'g' && token[0] != 'G')) {
    throw ParseError("bad token '" + std::string(token) + "'", position);
  }
  const std::string_view digits = token.substr(1);
  if (digits.size() > 1 && digits[0] == '0') {
    throw ParseError("leading zero in '" + std::string(token) + "'", position);
  }
  Generator index = 0;
  const auto [end, ec] =
      std::from_chars(digits.data(), digits.data() + digits.size(), index);
  if (ec != std::errc() || end != digits.data() + digits.size()) {
    throw ParseError("bad generator index in '" + std::string(token) + "'",
                     position);
  }
  // The letter code 2*index+1 must fit.
  if (index > (UINT32_MAX >> 1) - 1) {
    throw ParseError("generator index too large", position);
  }
  return token[0] == 'g' ? Letter::positive(index) : Letter::negative(index);
}

}  // namespace

Word parse_word(std::string_view text) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && is_space(text[i])) ++i;
    std::size_t j = i;
    while (j < text.size() && !is_space(text[j])) ++j;
    if (j > i) tokens.push_back(text.substr(i, j - i));
    i = j;
  }
  if (tokens.empty()) throw ParseError("empty word text; use 'e'", 0);
  if (tokens.size() == 1 && tokens[0] == "e") return Word();
  std::vector<Letter> letters;
  letters.reserve(tokens.size());
  for (std::size_t k = 0; k < tokens.size(); ++k) {
    if (tokens[k] == "e") {
      throw ParseError("'e' must be the only token", k);
    }
    letters.push_back(parse_token(tokens[k], k));
  }
  return reduce(letters);
}

std::string format_letter(Letter l) {
  return (l.is_positive() ? "g" : "G") + std::to_string(l.index());
}

std::string format_word(const Word& w) {
  if (w.empty()) return "e";
  std::string out;
  for (const Letter l : w) {
    if (!out.empty()) out += ' ';
    out += format_letter(l);
  }
  return out;
}

}  // namespace sixth
