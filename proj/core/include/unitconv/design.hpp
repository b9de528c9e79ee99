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

#ifndef UNITCONV_DESIGN_HPP_
#define UNITCONV_DESIGN_HPP_

#include <cstddef>
#include <cstdint>

#include "unitconv/code.hpp"
#include "unitconv/scheme.hpp"

namespace unitconv {

// G[z] = sum_i U[E_i] z^i with parameters (n, r, r mu; mu).
ConvCode build_generator(const UnitScheme& unit, const SelectionScheme& scheme);

// (n - r)(floor(delta / r) + 1) + delta + 1.
std::uint64_t gsb(std::uint64_t n, std::uint64_t r, std::uint64_t delta);

// Deterministic scheme of mu + 1 tuples. E_0 = (0, ..., r-1) and index 0 is
// used nowhere else. Each later tuple is the unused sorted r-subset of
// {1, ..., n-1} meeting the indices used so far least, ties broken
// lexicographically; once those run out, reorderings of earlier tuples in
// next-permutation order, then repeats of earlier tuples. Candidates that
// would make G catastrophic are skipped. Throws kInfeasibleRate for r >= n.
SelectionScheme auto_design(const UnitScheme& unit, std::size_t r, std::size_t mu);

// Attaches a right inverse and a check matrix. The structured constructions
// are tried first; the general reduction over F[z] is the fallback. Throws
// kCatastrophic when no polynomial right inverse exists.
void certify(ConvCode& code, const UnitScheme* unit);

}  // namespace unitconv

#endif  // UNITCONV_DESIGN_HPP_
