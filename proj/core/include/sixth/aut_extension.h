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

// Does some automorphism of (N, *_T) extend a finite partial map s?
//
// The checker tests
//   (1) s(n * m) = s(n) * s(m) whenever n, m, n * m are in dom(s), and
//   (2) some rho in Aut(T), l in {0,1} and t with |t| <= bound satisfy
//       s(3i+1) = k * (3 rho(i) + 1 + l) * k' for every 3i+1 in dom(s),
//       where k = code(t) and k' = code(t^-1).
// In kVerified mode it also requires the automorphism built from
// (rho, 1 - 2l, t) to agree with s on all of dom(s). Without that step the
// two conditions are only sufficient when dom(s) is closed under taking
// codes of subwords, e.g. an initial segment {0, ..., k-1}.
//
// The oracle enumerates canonical automorphisms t v_{rho(i)}^eps t^-1
// directly and compares their action on dom(s).

#ifndef SIXTH_AUT_EXTENSION_H_
#define SIXTH_AUT_EXTENSION_H_

#include <cstddef>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "sixth/coding.h"
#include "sixth/graph.h"
#include "sixth/williams.h"

namespace sixth {

enum class ExtensionMode { kVerified, kLiteral };

struct ExtensionWitness {
  // r(i) for each i with 3i+1 in dom(s).
  std::vector<std::pair<std::size_t, std::size_t>> r;
  Permutation rho;
  Code k = 0;
  Code k_inverse = 0;
  int l = 0;
  Word t;
};

struct ExtensionResult {
  bool nonempty = false;
  std::optional<ExtensionWitness> witness;
  std::size_t bound = 0;
  // The witness conjugator has length exactly `bound`.
  bool at_bound = false;
  // Condition (1) held but no conjugator of length <= bound worked; a longer
  // one might.
  bool bound_exhausted = false;
  std::string reason;
};

// (maxlen - 1) / 2 over the representatives of s(3i+1), or over all of
// rng(s) when dom(s) holds no generator code.
std::size_t default_extension_bound(CodingTable& table, const PartialMap& s);

// Reusable across many partial maps for one graph and one bound.
class AutExtensionChecker {
 public:
  AutExtensionChecker(CodingTable& table, std::size_t bound,
                      ExtensionMode mode = ExtensionMode::kVerified);

  ExtensionResult check(const PartialMap& s);

 private:
  struct Candidate {
    Word t;
    Permutation rho;
    int epsilon;
    GeneratorMap map;
  };

  // Codes are registered beforehand; returns false if one is outside the
  // code space.
  bool register_codes(const PartialMap& s);
  void refresh_caches();
  Code lookup(const Word& w) const;
  Code image(std::size_t candidate, Code c);
  Code product(Code n, Code m);

  CodingTable& table_;
  std::size_t bound_;
  ExtensionMode mode_;
  std::vector<Candidate> candidates_;
  std::vector<std::vector<Code>> images_;
  std::unordered_map<Code, std::unordered_map<Code, Code>> products_;
  std::size_t table_size_seen_ = 0;
};

ExtensionResult sigma_ns_nonempty(const Graph& t, const PartialMap& s,
                                  std::optional<std::size_t> bound = std::nullopt,
                                  ExtensionMode mode = ExtensionMode::kVerified);

class CanonicalAutOracle {
 public:
  CanonicalAutOracle(CodingTable& table, std::size_t bound);

  // First canonical automorphism (t shortlex, rho lex, epsilon +1 first)
  // whose action sends rep(c) to rep(s(c)) in G_T for every c in dom(s).
  std::optional<CanonicalAuto> find(const PartialMap& s);
  bool extends(const PartialMap& s) { return find(s).has_value(); }

 private:
  std::size_t slot(Code c);
  bool sends(std::size_t candidate, std::size_t from, std::size_t to);

  CodingTable& table_;
  std::vector<CanonicalAuto> autos_;
  std::vector<GeneratorMap> maps_;
  std::vector<Word> slot_words_;
  std::unordered_map<Code, std::size_t> slots_;
  // cache_[candidate][from][to]: -1 unknown, else 0/1.
  std::vector<std::vector<std::vector<signed char>>> cache_;
};

bool oracle_aut_extends(const Graph& t, const PartialMap& s, std::size_t bound);

}  // namespace sixth

#endif  // SIXTH_AUT_EXTENSION_H_
