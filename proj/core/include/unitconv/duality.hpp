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

#ifndef UNITCONV_DUALITY_HPP_
#define UNITCONV_DUALITY_HPP_

#include <cstddef>
#include <optional>
#include <vector>

#include "unitconv/code.hpp"

namespace unitconv {

// Certificate iff G(z) G(z^{-1})^T = 0. Throws kWrongRate unless n = 2r.
std::optional<DualityCertificate> is_self_dual(const ConvCode& code);

// Every row h of H(z^{-1})^T, shifted to start at z^0, lies in the row module
// of G: (h R) G = h. Requires G R = I (kInvalidArgument otherwise).
bool dual_contained(const PolyMatrix& g, const LaurentMatrix& h, const PolyMatrix& r);

std::optional<DualityCertificate> is_dual_containing(const ConvCode& code, const LaurentMatrix& h,
                                                     const PolyMatrix& r);

// G = X_0 + X_1 z for 2 blocks, (X_0; X_1) + (X_2; X_3) z for 4 blocks, where
// X_k is block order[k] of the orthogonal U (identity order when empty).
// Requires characteristic 2 (kWrongCharacteristic) and U U^T = I
// (kNotOrthogonal). The self-dual certificate is computed, not assumed.
ConvCode build_self_dual(const Matrix& U, std::size_t blocks,
                         const std::vector<std::size_t>& order = {});

// Sliding window over the blocks X_0..X_{b-1} of an orthogonal U:
// G = (X_0; ...; X_{b-1-s}) + (X_s; ...; X_{b-1}) z. The check matrix is
// H = sum_k (-1)^k Y_k^T z^{-k} with Y_k the k-th group of s consecutive
// blocks; s must divide b. Requires characteristic 2.
ConvCode build_dual_containing(const Matrix& U, std::size_t blocks, std::size_t shift = 1);

// H for the sliding-window construction above, over any characteristic.
LaurentMatrix sliding_window_check(const Matrix& U, std::size_t blocks, std::size_t shift);

}  // namespace unitconv

#endif  // UNITCONV_DUALITY_HPP_
