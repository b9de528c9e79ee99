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

#include "unitconv/duality.hpp"

#include <algorithm>
#include <numeric>

#include "unitconv/design.hpp"

namespace unitconv {

std::optional<DualityCertificate> is_self_dual(const ConvCode& code) {
  if (code.n != 2 * code.r) {
    throw Error(ErrorCode::kWrongRate, "self-duality needs n = 2r, got " + code.parameters());
  }
  const LaurentMatrix gt = LaurentMatrix(code.G).conjugate_transpose();
  if (!poly_mul(code.G, gt).is_zero()) return std::nullopt;
  DualityCertificate cert;
  cert.kind = DualityKind::kSelfDual;
  cert.check = gt.shifted(static_cast<int>(code.mu));
  cert.detail = "G(z) G(z^-1)^T = 0 over " + code.field.name();
  return cert;
}

bool dual_contained(const PolyMatrix& g, const LaurentMatrix& h, const PolyMatrix& r) {
  if (!(g * r == PolyMatrix::identity(g.field(), g.rows()))) {
    throw Error(ErrorCode::kInvalidArgument, "supplied R is not a right inverse of G");
  }
  if (h.rows() != g.cols()) throw Error(ErrorCode::kDimensionMismatch, "check matrix has the wrong number of rows");
  const LaurentMatrix dual = h.conjugate_transpose();
  for (std::size_t i = 0; i < dual.rows(); ++i) {
    const std::vector<std::size_t> one{i};
    std::vector<Matrix> blocks;
    for (const auto& b : dual.blocks()) blocks.push_back(b.select_rows(one));
    const LaurentMatrix row = LaurentMatrix::from_blocks(0, std::move(blocks));
    if (row.is_zero()) continue;
    const PolyMatrix hp = row.to_poly();
    if (!(hp * r * g == hp)) return false;
  }
  return true;
}

std::optional<DualityCertificate> is_dual_containing(const ConvCode& code, const LaurentMatrix& h,
                                                     const PolyMatrix& r) {
  if (!poly_mul(code.G, h).is_zero()) return std::nullopt;
  if (!dual_contained(code.G, h, r)) return std::nullopt;
  DualityCertificate cert;
  cert.kind = DualityKind::kDualContaining;
  cert.check = h;
  cert.right_inverse = r;
  cert.detail = "(h R) G = h for every dual row over " + code.field.name();
  return cert;
}

namespace {

void require_char2_orthogonal(const Matrix& U) {
  if (U.field().characteristic() != 2) {
    throw Error(ErrorCode::kWrongCharacteristic,
                "construction relies on -1 = 1; field is " + U.field().name());
  }
  if (!is_orthogonal(U)) throw Error(ErrorCode::kNotOrthogonal, "U U^T is not the identity");
}

std::vector<std::size_t> block_rows(std::size_t block, std::size_t size) {
  std::vector<std::size_t> rows(size);
  std::iota(rows.begin(), rows.end(), block * size);
  return rows;
}

}  // namespace

ConvCode build_self_dual(const Matrix& U, std::size_t blocks, const std::vector<std::size_t>& order) {
  require_char2_orthogonal(U);
  if (blocks != 2 && blocks != 4) throw Error(ErrorCode::kInvalidArgument, "self-dual construction uses 2 or 4 blocks");
  std::vector<std::size_t> perm = order;
  if (perm.empty()) {
    perm.resize(blocks);
    std::iota(perm.begin(), perm.end(), 0);
  }
  auto sorted = perm;
  std::sort(sorted.begin(), sorted.end());
  std::vector<std::size_t> expected(blocks);
  std::iota(expected.begin(), expected.end(), 0);
  if (sorted != expected) {
    throw Error(ErrorCode::kInvalidArgument, "block order must be a permutation of 0.." + std::to_string(blocks - 1));
  }
  if (U.rows() % blocks != 0) throw Error(ErrorCode::kNoBlockPartition, "block count does not divide n");
  const UnitScheme unit = UnitScheme::from_orthogonal(U).with_blocks(U.rows() / blocks);
  const std::size_t half = blocks / 2;
  std::vector<std::vector<std::size_t>> tuples(2);
  for (std::size_t k = 0; k < half; ++k) {
    tuples[0].push_back(perm[k]);
    tuples[1].push_back(perm[half + k]);
  }
  ConvCode code = build_generator(unit, block_scheme(unit, tuples));
  certify(code, &unit);
  auto cert = is_self_dual(code);
  if (!cert) throw Error(ErrorCode::kVerificationFailed, "self-dual identity fails");
  code.duality = std::move(*cert);
  code.flags.self_dual = true;
  return code;
}

LaurentMatrix sliding_window_check(const Matrix& U, std::size_t blocks, std::size_t shift) {
  if (blocks == 0 || U.rows() % blocks != 0) throw Error(ErrorCode::kNoBlockPartition, "block count does not divide n");
  if (shift == 0 || shift >= blocks || blocks % shift != 0) {
    throw Error(ErrorCode::kInvalidArgument, "shift must be a proper divisor of the block count");
  }
  const Field& f = U.field();
  const std::size_t b = U.rows() / blocks;
  const std::size_t groups = blocks / shift;
  std::vector<Matrix> coeffs;
  for (std::size_t k = 0; k < groups; ++k) {
    std::vector<std::size_t> rows;
    for (std::size_t j = 0; j < shift; ++j) {
      auto part = block_rows(k * shift + j, b);
      rows.insert(rows.end(), part.begin(), part.end());
    }
    Matrix y = U.select_rows(rows).transpose();
    if (k % 2 == 1) y = y.scaled(f.neg(1));
    coeffs.push_back(std::move(y));
  }
  std::reverse(coeffs.begin(), coeffs.end());
  return LaurentMatrix::from_blocks(-static_cast<int>(groups - 1), std::move(coeffs));
}

ConvCode build_dual_containing(const Matrix& U, std::size_t blocks, std::size_t shift) {
  require_char2_orthogonal(U);
  const LaurentMatrix h = sliding_window_check(U, blocks, shift);
  const UnitScheme unit = UnitScheme::from_orthogonal(U).with_blocks(U.rows() / blocks);
  std::vector<std::vector<std::size_t>> tuples(2);
  for (std::size_t k = 0; k + shift < blocks; ++k) {
    tuples[0].push_back(k);
    tuples[1].push_back(k + shift);
  }
  ConvCode code = build_generator(unit, block_scheme(unit, tuples));
  certify(code, &unit);
  auto cert = is_dual_containing(code, h, *code.right_inverse);
  if (!cert) throw Error(ErrorCode::kVerificationFailed, "dual-containing certificate fails");
  code.duality = std::move(*cert);
  code.flags.dual_containing = true;
  return code;
}

}  // namespace unitconv
