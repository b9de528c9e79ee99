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

#include "unitconv/groupring.hpp"

#include <gtest/gtest.h>

#include <random>

namespace unitconv {
namespace {

GroupRingElement element(const Field& f, const GroupSpec& g,
                         std::vector<std::pair<std::int64_t, std::int64_t>> exps) {
  GroupRingElement e(f, g);
  for (auto [a, b] : exps) e.add_term(g.element(a, b), 1);
  return e;
}

TEST(GroupSpecTest, AxiomsHold) {
  for (const auto& g : {GroupSpec::cyclic(6), GroupSpec::product(5, 3), GroupSpec::dihedral(4),
                        GroupSpec::dihedral(5)}) {
    const std::size_t n = g.order();
    for (std::size_t x = 0; x < n; ++x) {
      EXPECT_EQ(g.mul(x, 0), x);
      EXPECT_EQ(g.mul(0, x), x);
      EXPECT_EQ(g.mul(x, g.inverse(x)), 0u);
      for (std::size_t y = 0; y < n; ++y)
        for (std::size_t z = 0; z < n; ++z)
          ASSERT_EQ(g.mul(g.mul(x, y), z), g.mul(x, g.mul(y, z)));
    }
  }
}

TEST(GroupSpecTest, DihedralRelation) {
  const GroupSpec d = GroupSpec::dihedral(4);
  const std::size_t a = d.element(1, 0), b = d.element(0, 1);
  EXPECT_EQ(d.mul(b, a), d.mul(d.inverse(a), b));
  EXPECT_EQ(d.mul(b, a), d.element(1, 1));  // ba is listed after b
  EXPECT_EQ(GroupSpec::parse("D8"), d);
  EXPECT_EQ(GroupSpec::parse("C204xC4").order(), 816u);
  EXPECT_EQ(GroupSpec::parse("C204xC4").name(), "C204xC4");
  EXPECT_THROW(GroupSpec::parse("Q8"), Error);
}

TEST(GroupRingTest, InvolutionsFromExamples) {
  const Field f = make_field(2);
  const GroupSpec c4 = GroupSpec::cyclic(4);
  const auto u = element(f, c4, {{1, 0}, {2, 0}, {3, 0}});
  EXPECT_EQ(gr_mul(u, u), GroupRingElement::one(f, c4));
  EXPECT_EQ(gr_transpose(u), u);

  const GroupSpec d8 = GroupSpec::dihedral(4);
  // 1 + b + ba is symmetric but squares to 1 + a + a^3 (b.ba = a, ba.b = a^-1);
  // 1 + b + ba^2 is the involution.
  const auto w = element(f, d8, {{0, 0}, {0, 1}, {1, 1}});
  EXPECT_EQ(gr_mul(w, w), element(f, d8, {{0, 0}, {1, 0}, {3, 0}}));
  EXPECT_EQ(gr_transpose(w), w);
  const auto w2 = element(f, d8, {{0, 0}, {0, 1}, {2, 1}});
  EXPECT_EQ(gr_mul(w2, w2), GroupRingElement::one(f, d8));

  const GroupSpec c8 = GroupSpec::cyclic(8);
  const auto x = element(f, c8, {{1, 0}, {4, 0}, {7, 0}});
  EXPECT_EQ(gr_mul(x, x), element(f, c8, {{0, 0}, {2, 0}, {6, 0}}));
  EXPECT_EQ(gr_transpose(x), x);
}

TEST(GroupRingTest, TransposeOfGenerator) {
  const Field f = make_field(2);
  const GroupSpec c4 = GroupSpec::cyclic(4);
  EXPECT_EQ(gr_transpose(element(f, c4, {{1, 0}})), element(f, c4, {{3, 0}}));
}

TEST(GroupRingTest, MatricesOfExamples) {
  const Field f = make_field(2);
  const auto u = element(f, GroupSpec::cyclic(4), {{1, 0}, {2, 0}, {3, 0}});
  EXPECT_EQ(to_matrix(u), Matrix::from_ints(f, {{0, 1, 1, 1}, {1, 0, 1, 1}, {1, 1, 0, 1}, {1, 1, 1, 0}}));
  const auto w = element(f, GroupSpec::dihedral(4), {{0, 0}, {0, 1}, {1, 1}});
  EXPECT_EQ(to_matrix(w), Matrix::from_ints(f, {{1, 0, 0, 0, 1, 1, 0, 0},
                                                {0, 1, 0, 0, 1, 0, 0, 1},
                                                {0, 0, 1, 0, 0, 0, 1, 1},
                                                {0, 0, 0, 1, 0, 1, 1, 0},
                                                {1, 1, 0, 0, 1, 0, 0, 0},
                                                {1, 0, 0, 1, 0, 1, 0, 0},
                                                {0, 0, 1, 1, 0, 0, 1, 0},
                                                {0, 1, 1, 0, 0, 0, 0, 1}}));
  const auto x = element(f, GroupSpec::cyclic(8), {{0, 0}, {2, 0}, {6, 0}});
  const Matrix m = to_matrix(x);
  EXPECT_EQ(m.select_rows(std::vector<std::size_t>{0, 1}),
            Matrix::from_ints(f, {{1, 0, 1, 0, 0, 0, 1, 0}, {0, 1, 0, 1, 0, 0, 0, 1}}));
  EXPECT_EQ(m.select_rows(std::vector<std::size_t>{6, 7}),
            Matrix::from_ints(f, {{1, 0, 0, 0, 1, 0, 1, 0}, {0, 1, 0, 0, 0, 1, 0, 1}}));
  EXPECT_TRUE(to_matrix(GroupRingElement::one(f, GroupSpec::dihedral(3))).is_identity());
}

GroupRingElement random_element(const Field& f, const GroupSpec& g, std::mt19937_64& rng) {
  GroupRingElement e(f, g);
  for (std::size_t k = 0; k < g.order(); ++k)
    if (rng() % 3 == 0) e.add_term(k, static_cast<Elem>(rng() % f.cardinality()));
  return e;
}

TEST(GroupRingTest, EmbeddingIsRingHomomorphism) {
  std::mt19937_64 rng(41);
  for (const auto& g : {GroupSpec::cyclic(7), GroupSpec::product(4, 3), GroupSpec::dihedral(5)}) {
    for (auto p : {2u, 3u}) {
      const Field f = make_field(p);
      for (int t = 0; t < 10; ++t) {
        const auto a = random_element(f, g, rng), b = random_element(f, g, rng);
        EXPECT_EQ(to_matrix(gr_mul(a, b)), to_matrix(a) * to_matrix(b));
        EXPECT_EQ(to_matrix(gr_add(a, b)), to_matrix(a) + to_matrix(b));
        EXPECT_EQ(to_matrix(gr_transpose(a)), to_matrix(a).transpose());
        if (auto inv = gr_inverse(a)) EXPECT_TRUE((to_matrix(a) * to_matrix(*inv)).is_identity());
      }
    }
  }
}

TEST(GroupRingTest, CyclicEmbeddingIsCirculant) {
  std::mt19937_64 rng(43);
  const Field f = make_field(5);
  const auto a = random_element(f, GroupSpec::cyclic(9), rng);
  const Matrix m = to_matrix(a);
  for (std::size_t i = 0; i < 9; ++i)
    for (std::size_t j = 0; j < 9; ++j) EXPECT_EQ(m(i, j), m(0, (j + 9 - i) % 9));
}

TEST(GroupRingTest, InverseOfInvolutionAndZeroDivisor) {
  const Field f = make_field(2);
  const auto u = element(f, GroupSpec::cyclic(4), {{1, 0}, {2, 0}, {3, 0}});
  EXPECT_EQ(gr_inverse(u), u);
  EXPECT_FALSE(gr_inverse(element(f, GroupSpec::cyclic(2), {{0, 0}, {1, 0}})).has_value());
  EXPECT_THROW(gr_mul(u, element(f, GroupSpec::cyclic(8), {{1, 0}})), Error);
}

TEST(TannerTest, SmallMatrices) {
  const Field f = make_field(2);
  const auto id = tanner_diagnostics(Matrix::identity(f, 4));
  EXPECT_EQ(id.column_weights, (std::vector<std::size_t>{1, 1, 1, 1}));
  EXPECT_FALSE(id.has_4cycle);
  EXPECT_TRUE(tanner_diagnostics(Matrix::from_ints(f, {{1, 1}, {1, 1}})).has_4cycle);
}

TEST(GroupRingTextTest, RoundTrip) {
  std::mt19937_64 rng(47);
  const auto a = random_element(make_field(3, 2), GroupSpec::product(5, 2), rng);
  const auto b = read_group_ring_text(write_group_ring_text(a));
  EXPECT_EQ(a, b);
  const auto c = random_element(make_field(2), GroupSpec::dihedral(4), rng);
  EXPECT_EQ(read_group_ring_text(write_group_ring_text(c)), c);
  EXPECT_THROW(read_group_ring_text("group=C4\n1 0\n"), Error);
  EXPECT_THROW(read_group_ring_text("group=C4 field=2\n1\n"), Error);
}

}  // namespace
}  // namespace unitconv
