/* Copyright 2026 The unitconv Authors.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#ifndef UNITCONV_DISTANCE_HPP_
#define UNITCONV_DISTANCE_HPP_

#include <cstddef>
#include <cstdint>
#include <limits>
#include <string>

#include "unitconv/code.hpp"
#include "unitconv/polymat.hpp"
#include "unitconv/scheme.hpp"

namespace unitconv {

struct DistanceOptions {
  // Encoder states q^(r mu) and edges q^(r (mu + 1)) of the trellis.
  std::uint64_t state_guard = std::uint64_t{1} << 22;
  std::uint64_t edge_budget = std::uint64_t{1} << 31;
  // Bounded searches run over inputs of degree <= mu + search_depth.
  std::size_t search_depth = 4;
  std::size_t support_cap = 3;
  // Inputs visited by one bounded search.
  std::uint64_t search_guard = 20'000'000;
  // Information words for block-code distances.
  std::uint64_t linear_guard = 10'000'000;
  unsigned jobs = 1;
};

// Shortest nonzero path from the zero state back to it in the encoder state
// graph. Memory-0 codes fall back to exhaustive block-code enumeration.
// Throws kGuardExceeded when the graph is too large and kCatastrophic when a
// zero-weight cycle avoids the zero state.
DistanceReport free_distance_exact(const ConvCode& code, const DistanceOptions& opts = {});

// Algebraic lower bound against min(GSB, bounded-search witness). `unit` may
// be null; it only supplies the Chebotarev status when block-code
// enumeration is out of reach.
DistanceReport free_distance_bounds(const ConvCode& code, const UnitScheme* unit,
                                    const DistanceOptions& opts = {});

struct SearchLimits {
  std::size_t max_degree = 0;
  std::size_t min_support = 1;
  std::size_t max_support = 1;
  std::uint64_t guard = 20'000'000;
  // Stop as soon as a codeword of weight <= stop_at is seen (0 disables).
  std::uint64_t stop_at = 0;
};

struct SearchResult {
  static constexpr std::uint64_t kNone = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t weight = kNone;
  InputSequence witness;
  std::uint64_t visited = 0;
  // False when some support level was skipped or only sampled through
  // weight-1 coefficient vectors.
  bool complete = true;
  bool hit_target = false;
};

// Minimum weight of u(z) G(z) over nonzero u with deg u <= max_degree and
// support in [min_support, max_support]. u_0 != 0 and its leading nonzero
// coordinate is 1.
SearchResult bounded_search(const PolyMatrix& g, const SearchLimits& limits);

struct SupportProfile {
  std::size_t t = 1;
  std::uint64_t lower = 0;
  std::string lower_provenance;
  std::uint64_t upper = SearchResult::kNone;
  std::string upper_provenance;
  InputSequence witness;
  // Every input inside the depth and support limits was enumerated.
  bool complete = false;
  std::uint64_t work = 0;
};

// Minimum codeword weight over inputs of support >= t and degree <= mu +
// search_depth. `lower` holds for every input of support >= t regardless of
// degree. Throws kGuardExceeded when no witness could be produced.
SupportProfile support_profile(const ConvCode& code, std::size_t t, const UnitScheme* unit,
                               const DistanceOptions& opts = {});

}  // namespace unitconv

#endif  // UNITCONV_DISTANCE_HPP_
