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

#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>

#include "unitconv/design.hpp"
#include "unitconv/groupring.hpp"

namespace unitconv {
namespace {

Matrix cyclic_matrix(const Field& f, std::size_t n, std::vector<std::int64_t> exps) {
  const GroupSpec g = GroupSpec::cyclic(n);
  GroupRingElement e(f, g);
  for (auto x : exps) e.add_term(g.element(x), 1);
  return to_matrix(e);
}

Matrix rows(const Matrix& m, std::size_t from, std::size_t count) {
  std::vector<std::size_t> idx(count);
  std::iota(idx.begin(), idx.end(), from);
  return m.select_rows(idx);
}

TEST(SelfDualTest, CyclicFourTwoBlocks) {
  const Field f = make_field(2);
  const ConvCode code = build_self_dual(cyclic_matrix(f, 4, {1, 2, 3}), 2);
  EXPECT_EQ(code.parameters(), "(4,2,2;1)");
  ASSERT_TRUE(code.duality.has_value());
  EXPECT_EQ(code.duality->kind, DualityKind::kSelfDual);
  EXPECT_TRUE(poly_mul(code.G, code.duality->check).is_zero());
  EXPECT_TRUE(code.flags.self_dual);
  EXPECT_NO_THROW(verify_certificates(code));
}

TEST(SelfDualTest, DihedralGeneratorFromDisplayedMatrix) {
  const Field f = make_field(2);
  const GroupSpec d8 = GroupSpec::dihedral(4);
  GroupRingElement u(f, d8);
  for (auto [i, s] : {std::pair{0, 0}, std::pair{0, 1}, std::pair{1, 1}}) u.add_term(d8.element(i, s), 1);
  const Matrix U = to_matrix(u);
  try {
    build_self_dual(U, 2);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNotOrthogonal);
  }
  const std::vector<Matrix> blocks{rows(U, 0, 4), rows(U, 4, 4)};
  ConvCode code = ConvCode::from_generator(PolyMatrix::from_blocks(blocks));
  EXPECT_EQ(code.parameters(), "(8,4,4;1)");
  EXPECT_TRUE(is_self_dual(code).has_value());
}

TEST(SelfDualTest, AllBlockOrdersOfCyclicEight) {
  const Field f = make_field(2);
  const Matrix U = cyclic_matrix(f, 8, {0, 2, 6});
  std::vector<std::size_t> order{0, 1, 2, 3};
  int certified = 0;
  do {
    const ConvCode code = build_self_dual(U, 4, order);
    EXPECT_EQ(code.parameters(), "(8,4,4;1)");
    EXPECT_TRUE(code.duality.has_value());
    ++certified;
  } while (std::next_permutation(order.begin(), order.end()));
  EXPECT_EQ(certified, 24);
}

TEST(SelfDualTest, ZeroMemoryIsNotSelfDual) {
  const UnitScheme f4 = UnitScheme::fourier(make_field(5), 4);
  const ConvCode code = build_generator(f4, SelectionScheme({{0, 1}}));
  EXPECT_FALSE(is_self_dual(code).has_value());
  const UnitScheme f5 = UnitScheme::fourier(make_field(11), 5);
  try {
    is_self_dual(build_generator(f5, SelectionScheme({{0, 1}})));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kWrongRate);
  }
}

TEST(SelfDualTest, RequiresCharacteristicTwo) {
  const Field f = make_field(3);
  try {
    build_self_dual(Matrix::identity(f, 4), 2);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kWrongCharacteristic);
  }
}

TEST(DualContainingTest, CyclicEightSlidingWindow) {
  const Field f = make_field(2);
  const Matrix U = cyclic_matrix(f, 8, {0, 2, 6});
  const ConvCode code = build_dual_containing(U, 4);
  EXPECT_EQ(code.parameters(), "(8,6,6;1)");
  ASSERT_TRUE(code.duality.has_value());
  // H = A^T - B^T z^-1 + C^T z^-2 - D^T z^-3.
  const LaurentMatrix& h = code.duality->check;
  EXPECT_EQ(h.offset(), -3);
  EXPECT_EQ(h.coefficient(0), rows(U, 0, 2).transpose());
  EXPECT_EQ(h.coefficient(-1), rows(U, 2, 2).transpose());
  EXPECT_EQ(h.coefficient(-3), rows(U, 6, 2).transpose());
  EXPECT_TRUE(poly_mul(code.G, h.shifted(3)).is_zero());
  EXPECT_NO_THROW(verify_certificates(code));
}

TEST(DualContainingTest, IndependentOfRightInverse) {
  const Field f = make_field(2);
  const Matrix U = cyclic_matrix(f, 8, {0, 2, 6});
  const ConvCode code = build_dual_containing(U, 4);
  const auto general = right_invertible_general(code.G);
  ASSERT_TRUE(general.has_value());
  ASSERT_FALSE(*general == *code.right_inverse);
  EXPECT_TRUE(dual_contained(code.G, code.duality->check, *code.right_inverse));
  EXPECT_TRUE(dual_contained(code.G, code.duality->check, *general));
}

TEST(DualContainingTest, SixteenPointRates) {
  const Field f = make_field(2);
  const Matrix U = cyclic_matrix(f, 16, {1, 7, 8, 9, 15});
  EXPECT_TRUE(is_orthogonal(U));
  const ConvCode c7 = build_dual_containing(U, 8, 1);
  EXPECT_EQ(c7.parameters(), "(16,14,14;1)");
  const ConvCode c6 = build_dual_containing(U, 8, 2);
  EXPECT_EQ(c6.parameters(), "(16,12,12;1)");
}

// Orthogonal 3x3 matrices over Z_3 found by exhaustive search; the first one
// in row-major order with no row a unit vector is used if any exists,
// otherwise the first one.
Matrix first_orthogonal_z3() {
  const Field f = make_field(3);
  std::optional<Matrix> first;
  for (int code = 0; code < 19683; ++code) {
    Matrix m(f, 3, 3);
    int c = code;
    for (std::size_t k = 0; k < 9; ++k) {
      m(k / 3, k % 3) = static_cast<Elem>(c % 3);
      c /= 3;
    }
    if (!is_orthogonal(m)) continue;
    if (!first) first = m;
    bool dense = true;
    for (std::size_t i = 0; i < 3; ++i) dense = dense && m.row_weight(i) > 1;
    if (dense) return m;
  }
  return *first;
}

TEST(DualContainingTest, CharacteristicThreeExample) {
  const Matrix U = first_orthogonal_z3();
  const Field& f = U.field();
  const UnitScheme unit = UnitScheme::from_orthogonal(U);
  ConvCode code = build_generator(unit, SelectionScheme({{0, 1}, {1, 2}}));
  certify(code, &unit);
  // K = e_2^T - e_1^T z + e_0^T z^2; its dual row is e_0 - e_1 z + e_2 z^2.
  const Matrix V = unit.V();
  auto col = [&](std::size_t j) { return V.select_cols(std::vector<std::size_t>{j}); };
  const PolyMatrix k = PolyMatrix::from_blocks({col(2), col(1).scaled(f.neg(1)), col(0)});
  EXPECT_TRUE((code.G * k).is_zero());
  const auto cert = is_dual_containing(code, k, *code.right_inverse);
  ASSERT_TRUE(cert.has_value());
  // The explicit combination ((1,0) + (0,1) z) G reproduces the dual row.
  const PolyMatrix m = PolyMatrix::from_blocks({Matrix::from_ints(f, {{1, 0}}), Matrix::from_ints(f, {{0, 1}})});
  const PolyMatrix dual_row = PolyMatrix::from_blocks(
      {U.select_rows(std::vector<std::size_t>{0}), U.select_rows(std::vector<std::size_t>{1}).scaled(f.neg(1)),
       U.select_rows(std::vector<std::size_t>{2})});
  EXPECT_EQ(m * code.G, dual_row);
}

TEST(DualContainingTest, RowOutsideModuleIsRejected) {
  const Field f = make_field(2);
  const ConvCode code = build_dual_containing(cyclic_matrix(f, 8, {0, 2, 6}), 4);
  // Perturb H by z^-1 on one entry of its constant coefficient.
  LaurentMatrix h = code.duality->check;
  Matrix bump(f, 8, 2);
  bump(0, 0) = 1;
  const LaurentMatrix perturbed = h + LaurentMatrix(PolyMatrix(bump));
  EXPECT_FALSE(dual_contained(code.G, perturbed, *code.right_inverse));
  EXPECT_FALSE(is_dual_containing(code, perturbed, *code.right_inverse).has_value());
}

}  // namespace
}  // namespace unitconv
