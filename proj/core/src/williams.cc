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

#include "sixth/williams.h"

#include <stdexcept>

#include "sixth/graphrel.h"

namespace sixth {

std::vector<Word> williams_seeds(const Graph& t) {
  std::vector<Word> seeds;
  const auto n = static_cast<Generator>(t.size());
  for (Generator i = 0; i < n; ++i) {
    seeds.push_back(Word::generator_power(i, kVertexExponent));
  }
  for (Generator i = 0; i < n; ++i) {
    for (Generator j = i + 1; j < n; ++j) {
      const Word pair{Letter::positive(i), Letter::positive(j)};
      const auto e = t.adjacent(i, j) ? kEdgeExponent : kNonEdgeExponent;
      seeds.push_back(power(pair, static_cast<int>(e)));
    }
  }
  return seeds;
}

Presentation williams_presentation(const Graph& t, std::size_t dehn_budget) {
  Presentation p(static_cast<Generator>(t.size()), williams_seeds(t));
  p.set_dehn_budget(dehn_budget);
  return p;
}

Word GeneratorMap::apply(const Word& w) const {
  std::vector<Letter> raw;
  for (const Letter l : w) {
    if (l.index() >= images_.size()) {
      throw std::invalid_argument("generator " + format_letter(l) +
                                  " has no image");
    }
    const Word& img = images_[l.index()];
    if (l.is_positive()) {
      raw.insert(raw.end(), img.begin(), img.end());
    } else {
      for (auto it = img.letters().rbegin(); it != img.letters().rend(); ++it) {
        raw.push_back(it->inverse());
      }
    }
  }
  return reduce(raw);
}

GeneratorMap induced_hom(const Graph& t, const Graph& s,
                         std::span<const std::size_t> map, int epsilon,
                         const Word& conj) {
  if (map.size() != t.size()) {
    throw std::invalid_argument("map must cover every vertex of T");
  }
  if (epsilon != 1 && epsilon != -1) {
    throw std::invalid_argument("epsilon must be +1 or -1");
  }
  std::vector<char> used(s.size(), 0);
  for (const std::size_t v : map) {
    if (v >= s.size() || used[v]) {
      throw std::invalid_argument("map must be an injection into S");
    }
    used[v] = 1;
  }
  const Word conj_inv = invert(conj);
  std::vector<Word> images;
  images.reserve(map.size());
  for (const std::size_t v : map) {
    images.push_back(conj *
                     Word::generator_power(static_cast<Generator>(v), epsilon) *
                     conj_inv);
  }
  return GeneratorMap(std::move(images));
}

bool is_homomorphism(const Presentation& from, const Presentation& to,
                     const GeneratorMap& gm) {
  if (gm.size() < from.alphabet_size()) return false;
  for (const Word& seed : from.seeds()) {
    if (!is_identity(to, gm.apply(seed))) return false;
  }
  return true;
}

bool check_injective_up_to(const Presentation& from, const Presentation& to,
                           const GeneratorMap& gm, std::size_t max_len) {
  const auto ball = reduced_words(from.alphabet_size(), max_len);
  std::vector<Word> images;
  images.reserve(ball.size());
  for (const Word& w : ball) images.push_back(gm.apply(w));
  for (std::size_t a = 0; a < ball.size(); ++a) {
    for (std::size_t b = a + 1; b < ball.size(); ++b) {
      if (!equal(to, images[a], images[b])) continue;
      if (!equal(from, ball[a], ball[b])) return false;
    }
  }
  return true;
}

GeneratorMap induced_map(const Graph& t, const CanonicalAuto& a) {
  return induced_hom(t, t, a.rho, a.epsilon, a.t);
}

std::size_t default_conjugator_bound(const GeneratorMap& gm) {
  std::size_t bound = 0;
  for (const Word& w : gm.images()) {
    if (!w.empty()) bound = std::max(bound, (w.size() - 1) / 2);
  }
  return bound;
}

std::optional<CanonicalAuto> aut_canonical_check(
    const Graph& t, const GeneratorMap& gm, std::optional<std::size_t> bound) {
  if (gm.size() != t.size()) return std::nullopt;
  const Presentation p = williams_presentation(t);
  const std::size_t b = bound.value_or(default_conjugator_bound(gm));
  const auto autos = automorphisms(t);
  for (const Word& conj : reduced_words(t.size(), b)) {
    const Word conj_inv = invert(conj);
    for (const Permutation& rho : autos) {
      for (const int epsilon : {1, -1}) {
        bool ok = true;
        for (std::size_t i = 0; i < t.size() && ok; ++i) {
          const Word target =
              conj *
              Word::generator_power(static_cast<Generator>(rho[i]), epsilon) *
              conj_inv;
          ok = equal(p, gm.image(i), target);
        }
        if (ok) return CanonicalAuto{rho, epsilon, conj};
      }
    }
  }
  return std::nullopt;
}

std::optional<GroupIso> iso_search(const Graph& t, const Graph& s) {
  if (t.size() != s.size()) return std::nullopt;
  const Presentation pt = williams_presentation(t);
  const Presentation ps = williams_presentation(s);
  std::optional<GroupIso> found;
  for_each_injection(t.size(), s.size(), [&](const std::vector<std::size_t>& rho) {
    Permutation inv(rho.size());
    for (std::size_t i = 0; i < rho.size(); ++i) inv[rho[i]] = i;
    const GeneratorMap fwd = induced_hom(t, s, rho, 1, Word());
    const GeneratorMap back = induced_hom(s, t, inv, 1, Word());
    if (!is_homomorphism(pt, ps, fwd) || !is_homomorphism(ps, pt, back)) {
      return true;
    }
    for (std::size_t i = 0; i < t.size(); ++i) {
      const Word v = Word::generator_power(static_cast<Generator>(i), 1);
      if (!equal(pt, back.apply(fwd.image(i)), v)) return true;
      if (!equal(ps, fwd.apply(back.image(i)), v)) return true;
    }
    found = GroupIso{rho, 1};
    return false;
  });
  return found;
}

}  // namespace sixth
