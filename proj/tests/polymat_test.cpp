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

#include "unitconv/polymat.hpp"

#include <gtest/gtest.h>

#include <random>

namespace unitconv {
namespace {

using upoly::Poly;

PolyMatrix row_poly(const Field& f, std::vector<Poly> entries) {
  PolyMatrix p(f, 1, entries.size());
  for (std::size_t j = 0; j < entries.size(); ++j) p.set_entry(0, j, entries[j]);
  return p;
}

PolyMatrix col(const Matrix& v, std::size_t j) {
  const std::vector<std::size_t> idx{j};
  return PolyMatrix(v.select_cols(idx));
}

PolyMatrix zero_col(const Field& f, std::size_t n) { return PolyMatrix(f, n, 1); }

const UnitScheme& f7() {
  static const UnitScheme u = UnitScheme::fourier(fourier_field_for_length(7, 3).field, 7);
  return u;
}

const UnitScheme& f5() {
  static const UnitScheme u = UnitScheme::fourier(make_field(11), 5);
  return u;
}

TEST(UpolyTest, DivisionIdentity) {
  const Field f = make_field(5);
  std::mt19937_64 rng(1);
  for (int t = 0; t < 200; ++t) {
    Poly a(rng() % 7), b(1 + rng() % 4);
    for (auto& x : a) x = static_cast<Elem>(rng() % 5);
    for (auto& x : b) x = static_cast<Elem>(rng() % 5);
    upoly::trim(a);
    upoly::trim(b);
    if (b.empty()) continue;
    Poly q, r;
    upoly::divmod(f, a, b, q, r);
    EXPECT_LT(upoly::degree(r), upoly::degree(b));
    EXPECT_EQ(upoly::add(f, upoly::mul(f, q, b), r), a);
  }
}

TEST(LaurentTest, CanonicalFormAndConjugate) {
  const Field f = make_field(2);
  const Matrix z = Matrix(f, 1, 2);
  const Matrix a = Matrix::from_ints(f, {{1, 0}});
  const Matrix b = Matrix::from_ints(f, {{1, 1}});
  const LaurentMatrix l = LaurentMatrix::from_blocks(-2, {z, a, z, b, z});
  EXPECT_EQ(l.offset(), -1);
  EXPECT_EQ(l.top(), 1);
  EXPECT_EQ(l, LaurentMatrix::from_blocks(-1, {a, z, b}));
  const LaurentMatrix c = l.conjugate_transpose();
  EXPECT_EQ(c.rows(), 2u);
  EXPECT_EQ(c.offset(), -1);
  EXPECT_EQ(c.coefficient(-1), b.transpose());
  EXPECT_EQ(c.coefficient(1), a.transpose());
  EXPECT_FALSE(l.is_polynomial());
  EXPECT_TRUE(l.shifted(1).is_polynomial());
  EXPECT_TRUE((l - l).is_zero());
}

TEST(PolyMulTest, IdentityIsNeutral) {
  const Field f = make_field(3);
  const PolyMatrix a = PolyMatrix::from_blocks(
      {Matrix::from_ints(f, {{1, 2}, {0, 1}}), Matrix::from_ints(f, {{0, 1}, {1, 1}})});
  EXPECT_EQ(poly_mul(a, PolyMatrix::identity(f, 2)), LaurentMatrix(a));
  EXPECT_THROW(poly_mul(a, PolyMatrix::identity(f, 3)), Error);
}

TEST(PolyMulTest, FullRowGeneratorTimesDualBasisIsOne) {
  const auto& u = f7();
  const SelectionScheme s({{0}, {1}, {2}, {3}, {4}, {5}, {6}});
  const PolyMatrix g = assemble_generator(u, s);
  EXPECT_EQ(poly_mul(g, col(u.V(), 0)), LaurentMatrix(PolyMatrix::identity(u.field(), 1)));
}

TEST(PolyMulTest, FivePointPairTimesDualPair) {
  const auto& u = f5();
  const SelectionScheme s({{0, 1}, {2, 3}});
  const std::vector<std::size_t> e0{0, 1};
  EXPECT_EQ(poly_mul(assemble_generator(u, s), PolyMatrix(u.V().select_cols(e0))),
            LaurentMatrix(PolyMatrix::identity(u.field(), 2)));
}

TEST(RightInverseTest, DisjointSevenPointScheme) {
  const auto& u = f7();
  const SelectionScheme s({{0, 1}, {2, 3}, {4, 5}});
  const std::vector<std::size_t> e0{0, 1};
  const PolyMatrix h = right_inverse_structured(s, u);
  EXPECT_EQ(h.degree(), 0);
  EXPECT_EQ(h, PolyMatrix(u.V().select_cols(e0)));
}

TEST(RightInverseTest, MemoryThreeSchemeUsesE0Dual) {
  const auto& u = f7();
  const SelectionScheme s({{0, 1}, {2, 3}, {4, 5}, {5, 6}});
  EXPECT_EQ(classify_selection(s), SelectionClass::kDisjoint);
  const PolyMatrix g = assemble_generator(u, s);
  const std::vector<std::size_t> e0{0, 1}, e1{2, 3};
  EXPECT_EQ(right_inverse_structured(s, u), PolyMatrix(u.V().select_cols(e0)));
  // The E_1 duals give z I rather than I.
  EXPECT_EQ(g * PolyMatrix(u.V().select_cols(e1)), PolyMatrix::identity(u.field(), 2).shifted(1));
}

TEST(RightInverseTest, FullRowScheme) {
  const auto& u = f5();
  const SelectionScheme s({{0}, {1}, {2}, {3}, {4}});
  EXPECT_EQ(right_inverse_structured(s, u), col(u.V(), 0));
}

TEST(RightInverseTest, UniqueRowNeumannSeries) {
  const auto& u = f5();
  const SelectionScheme s({{0, 1}, {1, 2}});
  EXPECT_EQ(classify_selection(s), SelectionClass::kUniqueRow);
  const PolyMatrix g = assemble_generator(u, s);
  const PolyMatrix h = right_inverse_structured(s, u);
  EXPECT_EQ(g * h, PolyMatrix::identity(u.field(), 2));
  EXPECT_EQ(h.degree(), 1);
  EXPECT_TRUE(right_invertible_general(g).has_value());
}

TEST(RightInverseTest, UniqueRowCanStillBeCatastrophic) {
  // Row 1 of G is (1 + z) e_1.
  const auto& u = f5();
  const SelectionScheme s({{0, 1}, {2, 1}});
  EXPECT_EQ(classify_selection(s), SelectionClass::kUniqueRow);
  EXPECT_FALSE(right_invertible_general(assemble_generator(u, s)).has_value());
  try {
    right_inverse_structured(s, u);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kCatastrophic);
  }
}

TEST(RightInverseTest, UnknownSchemeIsRejected) {
  const SelectionScheme s({{0, 1}, {1, 0}});
  try {
    right_inverse_structured(s, f5());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kConditionNotMet);
  }
}

TEST(GeneralInverseTest, CoprimeAndCommonFactor) {
  const Field f = make_field(2);
  const PolyMatrix g = row_poly(f, {{1}, {0, 1}});
  const auto h = right_invertible_general(g);
  ASSERT_TRUE(h.has_value());
  EXPECT_EQ(g * *h, PolyMatrix::identity(f, 1));
  EXPECT_FALSE(right_invertible_general(row_poly(f, {{0, 1}, {0, 0, 1}})).has_value());
  EXPECT_FALSE(right_invertible_general(row_poly(f, {{1, 1}, {1, 0, 1}})).has_value());
  const PolyMatrix g2 = row_poly(f, {{1, 1}, {1, 0, 1}, {0, 1}});
  const auto h2 = right_invertible_general(g2);
  ASSERT_TRUE(h2.has_value());
  EXPECT_EQ(g2 * *h2, PolyMatrix::identity(f, 1));
}

// Random invertible matrix over GF(p).
Matrix random_unit(const Field& f, std::size_t n, std::mt19937_64& rng) {
  while (true) {
    Matrix m(f, n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m(i, j) = static_cast<Elem>(rng() % f.cardinality());
    if (rank(m) == n) return m;
  }
}

TEST(GeneralInverseTest, ThreeBlockWitness) {
  std::mt19937_64 rng(17);
  const Field f = make_field(5);
  const UnitScheme u = UnitScheme::from_matrix(random_unit(f, 6, rng)).with_blocks(2);
  const SelectionScheme s = block_scheme(u, {{0, 1}, {1, 2}});
  const PolyMatrix g = assemble_generator(u, s);
  const std::vector<std::size_t> d{0, 1}, e{2, 3};
  const Matrix D = u.V().select_cols(d), E = u.V().select_cols(e);
  const Matrix zero(f, 6, 2);
  const std::vector<Matrix> de{D, E}, zd{zero, D};
  const PolyMatrix witness = PolyMatrix(Matrix::hstack(de)) - PolyMatrix(Matrix::hstack(zd)).shifted(1);
  EXPECT_EQ(g * witness, PolyMatrix::identity(f, 4));
  EXPECT_TRUE(right_invertible_general(g).has_value());
  EXPECT_EQ(g * right_inverse_structured(s, u), PolyMatrix::identity(f, 4));
}

TEST(GeneralInverseTest, AgreesWithStructuredOnRandomSchemes) {
  std::mt19937_64 rng(23);
  int structured = 0, catastrophic = 0;
  for (auto p : {2u, 3u, 5u, 7u}) {
    const Field f = make_field(p);
    for (int t = 0; t < 60; ++t) {
      const std::size_t n = 3 + rng() % 4;
      const UnitScheme u = UnitScheme::from_matrix(random_unit(f, n, rng));
      const std::size_t r = 1 + rng() % (n - 1), mu = 1 + rng() % 2;
      std::vector<std::vector<std::size_t>> tuples;
      for (std::size_t i = 0; i <= mu; ++i) {
        std::vector<std::size_t> perm(n);
        for (std::size_t k = 0; k < n; ++k) perm[k] = k;
        std::shuffle(perm.begin(), perm.end(), rng);
        tuples.emplace_back(perm.begin(), perm.begin() + static_cast<std::ptrdiff_t>(r));
      }
      const SelectionScheme s(tuples);
      if (classify_selection(s) == SelectionClass::kUnknown) continue;
      const PolyMatrix g = assemble_generator(u, s);
      const bool exists = right_invertible_general(g).has_value();
      try {
        const PolyMatrix h = right_inverse_structured(s, u);
        EXPECT_TRUE(exists);
        EXPECT_EQ(g * h, PolyMatrix::identity(f, r));
        ++structured;
      } catch (const Error& e) {
        ASSERT_EQ(e.code(), ErrorCode::kCatastrophic);
        EXPECT_FALSE(exists);
        ++catastrophic;
      }
    }
  }
  EXPECT_GT(structured, 50);
}

TEST(CheckMatrixTest, SevenPointExample) {
  const auto& u = f7();
  const Field& f = u.field();
  const SelectionScheme s({{0, 1}, {2, 3}, {4, 5}});
  const PolyMatrix k = check_matrix(s, u);
  const std::vector<std::size_t> rest{2, 3, 4, 5, 6};
  const std::vector<PolyMatrix> z1{col(u.V(), 0), col(u.V(), 1), zero_col(f, 7), zero_col(f, 7),
                                   zero_col(f, 7)};
  const std::vector<PolyMatrix> z2{zero_col(f, 7), zero_col(f, 7), col(u.V(), 0), col(u.V(), 1),
                                   zero_col(f, 7)};
  const PolyMatrix expected = PolyMatrix(u.V().select_cols(rest)) -
                              PolyMatrix::hstack(z1).shifted(1) - PolyMatrix::hstack(z2).shifted(2);
  EXPECT_EQ(k, expected);
  EXPECT_TRUE((assemble_generator(u, s) * k).is_zero());
}

TEST(CheckMatrixTest, FullRowScheme) {
  const auto& u = f5();
  const SelectionScheme s({{0}, {1}, {2}, {3}, {4}});
  const PolyMatrix k = check_matrix(s, u);
  for (std::size_t j = 1; j < 5; ++j) {
    const std::vector<std::size_t> one{j - 1};
    EXPECT_EQ(k.select_cols(one), col(u.V(), j) - col(u.V(), 0).shifted(j));
  }
  EXPECT_EQ(rank(k.block(0)), 4u);
}

TEST(CheckMatrixTest, ThreeBlockSecondPower) {
  std::mt19937_64 rng(29);
  const Field f = make_field(3);
  const UnitScheme u = UnitScheme::from_matrix(random_unit(f, 6, rng)).with_blocks(2);
  const SelectionScheme s = block_scheme(u, {{0}, {1}, {2}});
  const PolyMatrix k = check_matrix(s, u);
  const std::vector<std::size_t> d{0, 1}, e{2, 3}, ff{4, 5};
  const PolyMatrix D(u.V().select_cols(d)), E(u.V().select_cols(e)), F(u.V().select_cols(ff));
  const std::vector<PolyMatrix> expected{E - D.shifted(1), F - D.shifted(2)};
  EXPECT_EQ(k, PolyMatrix::hstack(expected));
}

TEST(CheckMatrixTest, UniqueRowWithNilpotentOverlap) {
  const auto& u = f5();
  const SelectionScheme s({{0, 1}, {1, 2}, {3, 4}});
  const PolyMatrix k = check_matrix(s, u);
  EXPECT_TRUE((assemble_generator(u, s) * k).is_zero());
  EXPECT_EQ(k.cols(), 3u);
}

TEST(KernelTest, KernelAnnihilates) {
  const auto& u = f5();
  const SelectionScheme s({{0, 1}, {1, 0}});
  const PolyMatrix g = assemble_generator(u, s);
  const PolyMatrix k = polynomial_kernel(g);
  EXPECT_EQ(k.cols(), 3u);
  EXPECT_TRUE((g * k).is_zero());
}

}  // namespace
}  // namespace unitconv
