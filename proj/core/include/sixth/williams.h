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

// The graph-to-group map T -> G_T with
//   G_T = < v_0..v_{n-1} | v_i^7, (v_i v_j)^11 on edges, (v_i v_j)^13 else >
// and maps between such groups given by generator images.

#ifndef SIXTH_WILLIAMS_H_
#define SIXTH_WILLIAMS_H_

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "sixth/graph.h"
#include "sixth/presentation.h"
#include "sixth/word.h"

namespace sixth {

inline constexpr std::uint32_t kVertexExponent = 7;
inline constexpr std::uint32_t kEdgeExponent = 11;
inline constexpr std::uint32_t kNonEdgeExponent = 13;

// v_i^7 for each i, then (v_i v_j)^11 or ^13 for i < j in lex order.
std::vector<Word> williams_seeds(const Graph& t);
Presentation williams_presentation(const Graph& t,
                                   std::size_t dehn_budget = kDefaultDehnBudget);

// A homomorphism from a free group on images.size() generators.
class GeneratorMap {
 public:
  GeneratorMap() = default;
  explicit GeneratorMap(std::vector<Word> images) : images_(std::move(images)) {}

  std::size_t size() const { return images_.size(); }
  const Word& image(std::size_t i) const { return images_.at(i); }
  const std::vector<Word>& images() const { return images_; }

  // Throws std::invalid_argument if w uses a generator >= size().
  Word apply(const Word& w) const;

  bool operator==(const GeneratorMap&) const = default;

 private:
  std::vector<Word> images_;
};

// i -> t v_{map[i]}^epsilon t^-1. Throws std::invalid_argument unless map is
// an injection from T's vertices into S's.
GeneratorMap induced_hom(const Graph& t, const Graph& s,
                         std::span<const std::size_t> map, int epsilon,
                         const Word& conj);

// Every seed relator of `from` is sent to the identity of `to`.
bool is_homomorphism(const Presentation& from, const Presentation& to,
                     const GeneratorMap& gm);

// No two words of length <= max_len that differ in `from` have equal
// images in `to`.
bool check_injective_up_to(const Presentation& from, const Presentation& to,
                           const GeneratorMap& gm, std::size_t max_len);

// theta(v_i) = t v_{rho(i)}^epsilon t^-1.
struct CanonicalAuto {
  Permutation rho;
  int epsilon = 1;
  Word t;

  bool operator==(const CanonicalAuto&) const = default;
};

GeneratorMap induced_map(const Graph& t, const CanonicalAuto& a);

// max_i (|gm(i)| - 1) / 2.
std::size_t default_conjugator_bound(const GeneratorMap& gm);

// First (t, rho, epsilon) with gm(i) = t v_{rho(i)}^epsilon t^-1 in G_T for
// all i, searching t in shortlex order with |t| <= bound, then rho over
// Aut(T) in lex order, then epsilon = +1 before -1.
std::optional<CanonicalAuto> aut_canonical_check(
    const Graph& t, const GeneratorMap& gm,
    std::optional<std::size_t> bound = std::nullopt);

struct GroupIso {
  Permutation rho;
  int epsilon = 1;
};

// First bijection rho (lex order) such that v_i -> v_{rho(i)} and its inverse
// are homomorphisms G_T -> G_S -> G_T composing to the identity on
// generators both ways. Adjacency is never consulted directly.
std::optional<GroupIso> iso_search(const Graph& t, const Graph& s);

}  // namespace sixth

#endif  // SIXTH_WILLIAMS_H_
