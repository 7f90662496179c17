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

#ifndef SIXTH_ERRORS_H_
#define SIXTH_ERRORS_H_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace sixth {

// Malformed text input. `position` is a token offset for words and a line
// number for graph and partial-map files.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what + " (at " + std::to_string(position) + ")"),
        position_(position) {}

  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

// A configured work budget (Dehn steps, enumerated words) ran out before the
// computation finished. The partial state is discarded, never reported.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An arithmetic limit was hit: a prime index past the sieve, or a 64-bit
// overflow while forming a vertex of the random graph.
class LimitExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace sixth

#endif  // SIXTH_ERRORS_H_
