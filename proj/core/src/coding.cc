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

#include "sixth/coding.h"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <mutex>
#include <sstream>
#include <stdexcept>

#include "sixth/errors.h"
#include "sixth/williams.h"

namespace sixth {

CodingTable::CodingTable(const Graph& t, std::size_t dehn_budget,
                         std::size_t candidate_budget)
    : graph_(t),
      presentation_(williams_presentation(t, dehn_budget)),
      candidate_budget_(candidate_budget) {
  by_length_.emplace_back();
  register_locked(0, Word());
}

void CodingTable::register_locked(Code code, Word word) {
  const std::size_t idx = entries_.size();
  if (by_length_.size() <= word.size()) by_length_.resize(word.size() + 1);
  by_length_[word.size()].push_back(idx);
  by_code_.emplace(code, idx);
  by_word_.emplace(word, idx);
  entries_.push_back({code, std::move(word)});
}

namespace {

// Letters of a word, optionally read as the inverse word.
struct View {
  const Word& w;
  std::size_t from;
  std::size_t size;
  bool inverted;

  Letter operator[](std::size_t k) const {
    return inverted ? w[from + size - 1 - k].inverse() : w[from + k];
  }
};

// Whether left * right has a subword longer than half a relator that uses
// letters from both sides.
bool straddles_half_relator(const Presentation& p, const View& left,
                            const View& right) {
  const auto& rel = p.relators().relators();
  const std::size_t reach = p.relators().max_length();
  const std::size_t total = left.size + right.size;
  auto at = [&](std::size_t k) {
    return k < left.size ? left[k] : right[k - left.size];
  };
  const std::size_t first = left.size > reach ? left.size - reach : 0;
  for (std::size_t s = first; s < left.size; ++s) {
    for (const std::size_t ri : p.starting_with(at(s).code())) {
      const Word& r = rel[ri];
      std::size_t len = 0;
      while (len < r.size() && s + len < total && at(s + len) == r[len]) ++len;
      if (s + len > left.size && 2 * len > r.size()) return true;
    }
  }
  return false;
}

// Cheap necessary condition for two distinct Dehn-reduced words to be equal
// in a C'(1/6) group. Strip the common prefix and suffix, leaving d = p a s
// and w = p b s. Then a b^-1 and b^-1 a are freely reduced and trivial, so
// each holds a subword longer than half a relator, and since a and b are
// Dehn-reduced that subword crosses the junction.
bool may_be_equal(const Presentation& p, const Word& d, const Word& w) {
  const std::size_t shorter = std::min(d.size(), w.size());
  std::size_t pre = 0;
  while (pre < shorter && d[pre] == w[pre]) ++pre;
  std::size_t suf = 0;
  while (pre + suf < shorter &&
         d[d.size() - 1 - suf] == w[w.size() - 1 - suf]) {
    ++suf;
  }
  const std::size_t na = d.size() - pre - suf;
  const std::size_t nb = w.size() - pre - suf;
  if (na == 0 || nb == 0) return na == nb;
  const View a{d, pre, na, false};
  const View b_inv{w, pre, nb, true};
  return straddles_half_relator(p, a, b_inv) &&
         straddles_half_relator(p, b_inv, a);
}

}  // namespace

Code CodingTable::next_composite_code_locked(Code above) {
  std::size_t k = above / 3 + 1;
  while (k < composite_used_.size() && composite_used_[k]) ++k;
  if (k >= composite_used_.size()) composite_used_.resize(2 * k + 16, 0);
  composite_used_[k] = 1;
  return 3 * static_cast<Code>(k);
}

bool CodingTable::is_more_than_half_relator(const Word& w) const {
  const auto& rel = presentation_.relators().relators();
  for (const std::size_t ri : presentation_.starting_with(w.front().code())) {
    const Word& r = rel[ri];
    if (w.size() > r.size() || 2 * w.size() <= r.size()) continue;
    if (std::equal(w.begin(), w.end(), r.begin())) return true;
  }
  return false;
}

void CodingTable::extend_one_length_locked() {
  const std::size_t len = completed_length_ + 1;
  const auto n = static_cast<Generator>(graph_.size());
  std::size_t added = 0;
  if (len == 1) {
    for (Generator i = 0; i < n; ++i) {
      register_locked(generator_code(i), Word::generator_power(i, 1));
      register_locked(inverse_generator_code(i), Word::generator_power(i, -1));
      added += 2;
    }
  } else {
    const std::vector<std::size_t> prefixes = by_length_[len - 1];
    for (const std::size_t pi : prefixes) {
      for (std::uint32_t c = 0; c < 2 * n; ++c) {
        const Letter x = Letter::from_code(c);
        const Word& prefix = entries_[pi].word;
        if (prefix.back() == x.inverse()) continue;
        if (++candidates_tried_ > candidate_budget_) {
          throw BudgetExceeded("coding enumeration exceeded " +
                               std::to_string(candidate_budget_) +
                               " candidate words");
        }
        const Word cand = prefix * Word{x};
        const auto suffix = by_word_.find(subword(cand, 1, len - 1));
        if (suffix == by_word_.end()) continue;
        if (is_more_than_half_relator(cand)) continue;
        if (find_code_locked(cand)) continue;
        const Code above =
            std::max(entries_[pi].code, entries_[suffix->second].code);
        register_locked(next_composite_code_locked(above), cand);
        ++added;
      }
    }
  }
  completed_length_ = len;
  if (added == 0) exhausted_ = true;
}

void CodingTable::extend_to_length_locked(std::size_t len) {
  while (completed_length_ < len && !exhausted_) extend_one_length_locked();
}

bool CodingTable::in_code_space_locked(Code c) const {
  if (c == 0) return true;
  if (c % 3 != 0) return (c - 1) / 3 < graph_.size();
  if (exhausted_) return by_code_.contains(c);
  return true;
}

bool CodingTable::all_codes_registered_locked(Code max_code) const {
  for (Code c = 0; c <= max_code; ++c) {
    if (in_code_space_locked(c) && !by_code_.contains(c)) return false;
  }
  return true;
}

std::optional<Code> CodingTable::find_code_locked(const Word& d) const {
  if (const auto it = by_word_.find(d); it != by_word_.end()) {
    return entries_[it->second].code;
  }
  // A shortlex-least representative is never longer than a Dehn-reduced
  // word for the same element.
  const std::size_t max_len = std::min(d.size(), by_length_.size() - 1);
  for (std::size_t len = 0; len <= max_len; ++len) {
    for (const std::size_t idx : by_length_[len]) {
      const Word& w = entries_[idx].word;
      if (!may_be_equal(presentation_, d, w)) continue;
      if (equal(presentation_, d, w)) {
        return entries_[idx].code;
      }
    }
  }
  return std::nullopt;
}

void CodingTable::extend_to_code(Code max_code) {
  std::unique_lock lock(mu_);
  while (!exhausted_ && !all_codes_registered_locked(max_code)) {
    extend_one_length_locked();
  }
}

void CodingTable::extend_to_length(std::size_t len) {
  std::unique_lock lock(mu_);
  extend_to_length_locked(len);
}

bool CodingTable::exhausted() const {
  std::shared_lock lock(mu_);
  return exhausted_;
}

std::size_t CodingTable::completed_length() const {
  std::shared_lock lock(mu_);
  return completed_length_;
}

std::size_t CodingTable::size() const {
  std::shared_lock lock(mu_);
  return entries_.size();
}

bool CodingTable::in_code_space(Code c) const {
  std::shared_lock lock(mu_);
  return in_code_space_locked(c);
}

std::optional<Word> CodingTable::find_word(Code c) const {
  std::shared_lock lock(mu_);
  const auto it = by_code_.find(c);
  if (it == by_code_.end()) return std::nullopt;
  return entries_[it->second].word;
}

std::optional<Code> CodingTable::find_code(const Word& w) const {
  const Word d = dehn_reduce(presentation_, w);
  std::shared_lock lock(mu_);
  return find_code_locked(d);
}

std::optional<Code> CodingTable::find_star(Code n, Code m) const {
  std::shared_lock lock(mu_);
  if (const auto it = star_cache_.find({n, m}); it != star_cache_.end()) {
    return it->second;
  }
  const auto a = by_code_.find(n);
  const auto b = by_code_.find(m);
  if (a == by_code_.end() || b == by_code_.end()) return std::nullopt;
  const Word d = dehn_reduce(
      presentation_, entries_[a->second].word * entries_[b->second].word);
  return find_code_locked(d);
}

Word CodingTable::word_of(Code c) {
  if (!in_code_space(c)) {
    throw std::out_of_range("code " + std::to_string(c) +
                            " is outside the code space");
  }
  if (auto w = find_word(c)) return *w;
  std::unique_lock lock(mu_);
  while (!by_code_.contains(c) && !exhausted_) extend_one_length_locked();
  const auto it = by_code_.find(c);
  if (it == by_code_.end()) {
    throw std::out_of_range("code " + std::to_string(c) + " is never assigned");
  }
  return entries_[it->second].word;
}

Code CodingTable::code_of(const Word& w) {
  const Word d = dehn_reduce(presentation_, w);
  {
    std::shared_lock lock(mu_);
    if (const auto it = by_word_.find(d); it != by_word_.end()) {
      return entries_[it->second].code;
    }
  }
  std::unique_lock lock(mu_);
  // d need not be geodesic, so its element may already be registered.
  auto code = find_code_locked(d);
  if (!code && completed_length_ < d.size() && !exhausted_) {
    extend_to_length_locked(d.size());
    code = find_code_locked(d);
  }
  if (!code) {
    throw std::logic_error("element of " + format_word(w) +
                           " missing after enumeration");
  }
  return *code;
}

Code CodingTable::star(Code n, Code m) {
  {
    std::shared_lock lock(mu_);
    if (const auto it = star_cache_.find({n, m}); it != star_cache_.end()) {
      return it->second;
    }
  }
  const Code c = code_of(word_of(n) * word_of(m));
  std::unique_lock lock(mu_);
  star_cache_.emplace(std::pair{n, m}, c);
  return c;
}

Code CodingTable::inverse_code(Code c) { return code_of(invert(word_of(c))); }

std::vector<std::pair<Code, Word>> CodingTable::entries() const {
  std::shared_lock lock(mu_);
  std::vector<std::pair<Code, Word>> out;
  out.reserve(entries_.size());
  for (const Entry& e : entries_) out.emplace_back(e.code, e.word);
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  return out;
}

InvariantReport check_invariants(CodingTable& table) {
  InvariantReport report;
  auto fail = [&](std::string msg) {
    report.ok = false;
    report.violations.push_back(std::move(msg));
  };
  const Presentation& p = table.presentation();
  const std::size_t n = table.graph().size();
  const auto entries = table.entries();

  const auto zero = table.find_word(0);
  if (!zero || !zero->empty()) fail("code 0 is not the identity");

  for (const auto& [code, word] : entries) {
    const std::string tag = std::to_string(code) + " <-> " + format_word(word);
    if (code % 3 != 0) {
      const std::size_t i = (code - 1) / 3;
      const int sign = code % 3 == 1 ? 1 : -1;
      if (i >= n) {
        fail(tag + ": generator code for a missing vertex");
      } else if (word != Word::generator_power(static_cast<Generator>(i), sign)) {
        fail(tag + ": forced generator code has the wrong word");
      }
    } else if (code == 0 ? !word.empty() : word.size() < 2) {
      fail(tag + ": composite code on a short word");
    }
    if (table.find_word(code) != word) fail(tag + ": word lookup mismatch");
    if (table.find_code(word) != code) fail(tag + ": code lookup mismatch");
    for (std::size_t len = 1; len < word.size(); ++len) {
      for (std::size_t pos = 0; pos + len <= word.size(); ++pos) {
        const Word sub = subword(word, pos, len);
        const auto sub_code = table.find_code(sub);
        if (!sub_code) {
          fail(tag + ": subword " + format_word(sub) + " is unregistered");
        } else if (*sub_code >= code) {
          fail(tag + ": subword " + format_word(sub) + " has code " +
               std::to_string(*sub_code));
        }
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    const auto g = table.find_word(generator_code(static_cast<Generator>(i)));
    const auto h =
        table.find_word(inverse_generator_code(static_cast<Generator>(i)));
    if (g && h && invert(*g) != *h) {
      fail("code " + std::to_string(3 * i + 2) + " is not the inverse of " +
           std::to_string(3 * i + 1));
    }
  }
  for (std::size_t a = 0; a < entries.size(); ++a) {
    for (std::size_t b = a + 1; b < entries.size(); ++b) {
      if (equal(p, entries[a].second, entries[b].second)) {
        fail("codes " + std::to_string(entries[a].first) + " and " +
             std::to_string(entries[b].first) + " name the same element");
      }
    }
  }
  return report;
}

PartialMap::PartialMap(std::vector<std::pair<Code, Code>> pairs) {
  std::sort(pairs.begin(), pairs.end());
  pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
  for (std::size_t i = 1; i < pairs.size(); ++i) {
    if (pairs[i].first == pairs[i - 1].first) {
      throw std::invalid_argument("partial map is not a function at " +
                                  std::to_string(pairs[i].first));
    }
  }
  std::vector<Code> values;
  for (const auto& pr : pairs) values.push_back(pr.second);
  std::sort(values.begin(), values.end());
  if (std::adjacent_find(values.begin(), values.end()) != values.end()) {
    throw std::invalid_argument("partial map is not injective");
  }
  pairs_ = std::move(pairs);
}

std::optional<Code> PartialMap::at(Code arg) const {
  const auto it = std::lower_bound(
      pairs_.begin(), pairs_.end(), arg,
      [](const auto& pr, Code a) { return pr.first < a; });
  if (it == pairs_.end() || it->first != arg) return std::nullopt;
  return it->second;
}

namespace {

std::optional<Code> to_code(const std::string& s) {
  Code v = 0;
  const auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || end != s.data() + s.size()) return std::nullopt;
  return v;
}

}  // namespace

PartialMap parse_partial_map(std::istream& in) {
  std::vector<std::pair<Code, Code>> pairs;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::vector<std::string> tok;
    for (std::string t; ls >> t;) tok.push_back(t);
    if (tok.empty() || tok[0][0] == '#') continue;
    const auto a = tok.size() == 2 ? to_code(tok[0]) : std::nullopt;
    const auto b = tok.size() == 2 ? to_code(tok[1]) : std::nullopt;
    if (!a || !b) throw ParseError("expected '<arg> <value>'", lineno);
    pairs.emplace_back(*a, *b);
  }
  try {
    return PartialMap(std::move(pairs));
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what(), lineno);
  }
}

PartialMap parse_partial_map(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_partial_map(in);
}

PartialMap read_partial_map_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return parse_partial_map(in);
}

std::string format_partial_map(const PartialMap& s) {
  std::string out;
  for (const auto& [a, b] : s.pairs()) {
    out += std::to_string(a) + " " + std::to_string(b) + "\n";
  }
  return out;
}

}  // namespace sixth
