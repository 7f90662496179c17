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

// The coding phi_T : G_T -> N and the transported product n * m.
//
// Elements are registered by their shortlex-least representative. The
// identity is 0, v_i is 3i+1 and v_i^-1 is 3i+2. A composite element gets
// the least unused multiple of 3 above the codes of its longest proper
// prefix and suffix, which keeps every subword's code below the word's.

#ifndef SIXTH_CODING_H_
#define SIXTH_CODING_H_

#include <cstddef>
#include <cstdint>
#include <istream>
#include <map>
#include <optional>
#include <shared_mutex>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "sixth/graph.h"
#include "sixth/presentation.h"
#include "sixth/word.h"

namespace sixth {

using Code = std::uint64_t;

inline constexpr std::size_t kDefaultCandidateBudget = 1'000'000;

inline constexpr Code generator_code(Generator i) { return 3 * Code{i} + 1; }
inline constexpr Code inverse_generator_code(Generator i) {
  return 3 * Code{i} + 2;
}

class CodingTable {
 public:
  explicit CodingTable(const Graph& t,
                       std::size_t dehn_budget = kDefaultDehnBudget,
                       std::size_t candidate_budget = kDefaultCandidateBudget);

  CodingTable(const CodingTable&) = delete;
  CodingTable& operator=(const CodingTable&) = delete;

  const Graph& graph() const { return graph_; }
  const Presentation& presentation() const { return presentation_; }

  // Registers elements until every code <= max_code in the code space is
  // assigned. Throws BudgetExceeded when the candidate budget runs out.
  void extend_to_code(Code max_code);
  // Registers every element whose representative has length <= len.
  void extend_to_length(std::size_t len);

  // True once the whole (finite) group is registered.
  bool exhausted() const;
  std::size_t completed_length() const;
  std::size_t size() const;

  // Whether some element has (or will get) code c. For an exhausted table
  // this is exact; otherwise composite codes are presumed reachable.
  bool in_code_space(Code c) const;

  // Lookups restricted to what is already registered.
  std::optional<Word> find_word(Code c) const;
  std::optional<Code> find_code(const Word& w) const;
  std::optional<Code> find_star(Code n, Code m) const;

  // As above, extending the enumeration as needed. word_of throws
  // std::out_of_range for codes outside the code space.
  Word word_of(Code c);
  Code code_of(const Word& w);
  Code star(Code n, Code m);
  Code inverse_code(Code c);

  // (code, representative) sorted by code.
  std::vector<std::pair<Code, Word>> entries() const;

 private:
  struct Entry {
    Code code;
    Word word;
  };

  void extend_one_length_locked();
  void extend_to_length_locked(std::size_t len);
  bool all_codes_registered_locked(Code max_code) const;
  bool in_code_space_locked(Code c) const;
  std::optional<Code> find_code_locked(const Word& dehn_reduced) const;
  Code next_composite_code_locked(Code above);
  void register_locked(Code code, Word word);
  bool is_more_than_half_relator(const Word& w) const;

  Graph graph_;
  Presentation presentation_;
  std::size_t candidate_budget_;

  mutable std::shared_mutex mu_;
  std::vector<Entry> entries_;
  std::vector<std::vector<std::size_t>> by_length_;
  std::unordered_map<Code, std::size_t> by_code_;
  std::unordered_map<Word, std::size_t, WordHash> by_word_;
  std::vector<char> composite_used_;  // indexed by code / 3
  std::size_t completed_length_ = 0;
  std::size_t candidates_tried_ = 0;
  bool exhausted_ = false;
  std::map<std::pair<Code, Code>, Code> star_cache_;
};

struct InvariantReport {
  bool ok = true;
  std::vector<std::string> violations;
};

// Checks forced codes, the mod-3 shape of other codes, pairwise distinctness
// in G_T, mutual inverse lookups and subword monotonicity over every proper
// subword of every representative.
InvariantReport check_invariants(CodingTable& table);

// A finite injective partial map on codes.
class PartialMap {
 public:
  PartialMap() = default;
  // Throws std::invalid_argument if not functional or not injective.
  explicit PartialMap(std::vector<std::pair<Code, Code>> pairs);

  const std::vector<std::pair<Code, Code>>& pairs() const { return pairs_; }
  std::size_t size() const { return pairs_.size(); }
  bool empty() const { return pairs_.empty(); }
  std::optional<Code> at(Code arg) const;
  bool contains(Code arg) const { return at(arg).has_value(); }

  bool operator==(const PartialMap&) const = default;

 private:
  std::vector<std::pair<Code, Code>> pairs_;  // sorted by argument
};

// Lines `<arg> <value>`; blank lines and `#` comments skipped.
// Throws ParseError with the line number.
PartialMap parse_partial_map(std::istream& in);
PartialMap parse_partial_map(std::string_view text);
PartialMap read_partial_map_file(const std::string& path);
std::string format_partial_map(const PartialMap& s);

}  // namespace sixth

#endif  // SIXTH_CODING_H_
