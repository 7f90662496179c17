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

#include "sixth/rado.h"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <set>
#include <shared_mutex>
#include <stdexcept>

#include "sixth/errors.h"

namespace sixth {
namespace {

class PrimeTable {
 public:
  std::uint64_t at(std::size_t index) {
    if (index >= kPrimeIndexLimit) {
      throw LimitExceeded("prime index " + std::to_string(index) +
                          " is beyond the table limit");
    }
    {
      std::shared_lock lock(mu_);
      if (index < primes_.size()) return primes_[index];
    }
    std::unique_lock lock(mu_);
    while (primes_.size() <= index) grow_locked(2 * sieved_to_ + 1024);
    return primes_[index];
  }

  // Makes sure every prime <= value is present.
  void cover(std::uint64_t value) {
    {
      std::shared_lock lock(mu_);
      if (value <= sieved_to_) return;
    }
    std::unique_lock lock(mu_);
    if (value <= sieved_to_) return;
    // An upper bound on p_limit is n (ln n + ln ln n) for n >= 6.
    const double n = static_cast<double>(kPrimeIndexLimit);
    const double max_value = n * (std::log(n) + std::log(std::log(n)));
    if (static_cast<double>(value) > max_value) {
      throw LimitExceeded("prime " + std::to_string(value) +
                          " is beyond the table limit");
    }
    grow_locked(std::max<std::uint64_t>(value, 2 * sieved_to_));
  }

  std::size_t index_of(std::uint64_t q) {
    cover(q);
    std::shared_lock lock(mu_);
    const auto it = std::lower_bound(primes_.begin(), primes_.end(), q);
    if (it == primes_.end() || *it != q) {
      throw std::invalid_argument(std::to_string(q) + " is not prime");
    }
    return static_cast<std::size_t>(it - primes_.begin());
  }

 private:
  void grow_locked(std::uint64_t limit) {
    std::vector<bool> composite(limit + 1, false);
    std::vector<std::uint64_t> primes;
    for (std::uint64_t i = 2; i <= limit; ++i) {
      if (composite[i]) continue;
      primes.push_back(i);
      for (std::uint64_t j = i * i; j <= limit; j += i) composite[j] = true;
    }
    primes_ = std::move(primes);
    sieved_to_ = limit;
  }

  std::shared_mutex mu_;
  std::vector<std::uint64_t> primes_;
  std::uint64_t sieved_to_ = 1;
};

PrimeTable& primes() {
  static PrimeTable table;
  return table;
}

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t out = 0;
  if (__builtin_mul_overflow(a, b, &out)) {
    throw LimitExceeded("witness search overflowed 64-bit vertices");
  }
  return out;
}

// Indices i >= 2 with p_i | m, ascending.
std::vector<RadoVertex> prime_factor_indices(std::uint64_t m) {
  std::set<RadoVertex> out;
  for (std::size_t i = 0; m > 1; ++i) {
    const std::uint64_t p = nth_prime(i);
    if (p > m / p) {
      out.insert(prime_index(m));  // remaining cofactor is prime
      break;
    }
    if (m % p != 0) continue;
    out.insert(i);
    while (m % p == 0) m /= p;
  }
  out.erase(out.begin(), out.lower_bound(2));
  return {out.begin(), out.end()};
}

void check_vertex(RadoVertex v) {
  if (v < 2) throw std::invalid_argument("random graph vertices are >= 2");
}

bool qualifies(RadoVertex x, const std::vector<RadoVertex>& a,
               const std::vector<RadoVertex>& b) {
  for (const RadoVertex y : a) {
    if (y == x || !rado_adjacent(x, y)) return false;
  }
  for (const RadoVertex z : b) {
    if (z == x || rado_adjacent(x, z)) return false;
  }
  return true;
}

}  // namespace

std::uint64_t nth_prime(std::size_t index) { return primes().at(index); }

std::size_t prime_index(std::uint64_t q) { return primes().index_of(q); }

bool rado_adjacent(RadoVertex m, RadoVertex n) {
  check_vertex(m);
  check_vertex(n);
  if (m == n) throw std::invalid_argument("adjacency needs distinct vertices");
  const RadoVertex lo = std::min(m, n);
  const RadoVertex hi = std::max(m, n);
  if (lo >= kPrimeIndexLimit) {
    throw LimitExceeded("prime index " + std::to_string(lo) +
                        " is beyond the table limit");
  }
  return hi % nth_prime(static_cast<std::size_t>(lo)) == 0;
}

RadoVertex extension_witness(const std::vector<RadoVertex>& a,
                             const std::vector<RadoVertex>& b) {
  for (const RadoVertex v : a) check_vertex(v);
  for (const RadoVertex v : b) check_vertex(v);
  for (const RadoVertex v : a) {
    if (std::find(b.begin(), b.end(), v) != b.end()) {
      throw std::invalid_argument("A and B must be disjoint");
    }
  }
  RadoVertex start = 2;
  std::uint64_t step = 1;
  if (!a.empty()) {
    // Below max(A), x ~ max(A) forces p_x | max(A).
    const RadoVertex top = *std::max_element(a.begin(), a.end());
    for (const RadoVertex x : prime_factor_indices(top)) {
      if (x < top && qualifies(x, a, b)) return x;
    }
    // Above max(A), x ~ y forces p_y | x for every y in A.
    for (const RadoVertex y : a) step = checked_mul(step, nth_prime(y));
    start = checked_mul(step, top / step + 1);
  }
  for (RadoVertex x = start;; x += step) {
    if (x < start) throw LimitExceeded("witness search overflowed");
    if (qualifies(x, a, b)) return x;
  }
}

std::vector<RadoVertex> embed_graph(const Graph& t) {
  std::vector<RadoVertex> image;
  for (std::size_t v = 0; v < t.size(); ++v) {
    std::vector<RadoVertex> a;
    std::vector<RadoVertex> b;
    for (std::size_t u = 0; u < v; ++u) {
      (t.adjacent(u, v) ? a : b).push_back(image[u]);
    }
    image.push_back(extension_witness(a, b));
  }
  return image;
}

Graph rado_induced_subgraph(const std::vector<RadoVertex>& values) {
  Graph g(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) {
    for (std::size_t j = i + 1; j < values.size(); ++j) {
      if (rado_adjacent(values[i], values[j])) g.add_edge(i, j);
    }
  }
  return g;
}

}  // namespace sixth
