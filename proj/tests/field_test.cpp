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

#include "unitconv/field.hpp"

#include <gtest/gtest.h>

#include <random>

namespace unitconv {
namespace {

TEST(FieldTest, PrimeFieldArithmetic) {
  const Field f = make_field(7);
  EXPECT_EQ(f.cardinality(), 7u);
  EXPECT_EQ(f.add(5, 4), 2u);
  EXPECT_EQ(f.mul(3, 5), 1u);
  EXPECT_EQ(f.inv(3), 5u);
  EXPECT_EQ(f.neg(2), 5u);
  EXPECT_EQ(f.from_int(-1), 6u);
  EXPECT_EQ(f.primitive_element(), 3u);
}

TEST(FieldTest, RejectsBadParameters) {
  EXPECT_THROW(make_field(6), Error);
  try {
    make_field(2, 2, std::vector<std::uint32_t>{1, 0, 1});  // x^2 + 1 = (x+1)^2
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kReducibleModulus);
  }
}

TEST(FieldTest, DefaultModulusIsLeastIrreducible) {
  EXPECT_EQ(make_field(2, 4).modulus(), (std::vector<std::uint32_t>{1, 1, 0, 0, 1}));
  EXPECT_EQ(make_field(3, 2).modulus(), (std::vector<std::uint32_t>{1, 0, 1}));
}

// Table arithmetic against schoolbook polynomial products, exhaustively for
// small fields.
class FieldTableTest : public ::testing::TestWithParam<std::pair<std::uint32_t, std::uint32_t>> {};

TEST_P(FieldTableTest, MatchesSchoolbook) {
  const auto [p, m] = GetParam();
  const Field f = make_field(p, m);
  const auto q = static_cast<Elem>(f.cardinality());
  for (Elem a = 0; a < q; ++a) {
    for (Elem b = 0; b < q; ++b) {
      ASSERT_EQ(f.mul(a, b), f.mul_reference(a, b)) << a << "*" << b;
      ASSERT_EQ(f.add(a, b), f.add_reference(a, b)) << a << "+" << b;
    }
    if (a != 0) ASSERT_EQ(f.mul(a, f.inv(a)), 1u);
    ASSERT_EQ(f.add(a, f.neg(a)), 0u);
  }
}

INSTANTIATE_TEST_SUITE_P(SmallFields, FieldTableTest,
                         ::testing::Values(std::pair{2u, 4u}, std::pair{3u, 2u},
                                           std::pair{3u, 3u}, std::pair{5u, 2u},
                                           std::pair{7u, 2u}, std::pair{2u, 8u}));

TEST(FieldTest, LargeExtensionSampled) {
  const Field f = make_field(3, 6);
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<Elem> d(0, 728);
  for (int i = 0; i < 20000; ++i) {
    const Elem a = d(rng), b = d(rng);
    ASSERT_EQ(f.mul(a, b), f.mul_reference(a, b));
    ASSERT_EQ(f.add(a, b), f.add_reference(a, b));
  }
}

TEST(FieldTest, RootsOfUnity) {
  EXPECT_EQ(root_of_unity(make_field(7), 3).value(), 2u);
  EXPECT_EQ(root_of_unity(make_field(11), 5).value(), 4u);
  EXPECT_EQ(root_of_unity(make_field(23), 11).value(), 2u);
  const Field f = make_field(2, 4);
  const auto w = root_of_unity(f, 5);
  EXPECT_EQ(w.pow(5).value(), 1u);
  EXPECT_NE(w.value(), 1u);
  try {
    root_of_unity(make_field(7), 4);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNoSuchRoot);
  }
}

TEST(FieldTest, FourierFieldRoutes) {
  const auto g = fourier_field_for_length(11);
  EXPECT_EQ(g.route, FieldRoute::kGermain);
  EXPECT_EQ(g.field.cardinality(), 23u);
  const auto c = fourier_field_for_length(7, 3);
  EXPECT_EQ(c.route, FieldRoute::kCyclotomic);
  EXPECT_EQ(c.field.cardinality(), 729u);
  EXPECT_EQ(c.field.modulus(), (std::vector<std::uint32_t>(7, 1)));
  try {
    fourier_field_for_length(7, 2);  // 2 has order 3 mod 7
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNoValidField);
  }
}

TEST(FieldTest, GermainSearch) {
  EXPECT_EQ(germain_search(6), 11u);
  EXPECT_EQ(germain_search(12), 23u);
  EXPECT_EQ(germain_search(3), 3u);
  EXPECT_EQ(germain_search(100), 113u);
}

TEST(FieldTest, CoefficientRoundTrip) {
  const Field f = make_field(5, 3);
  for (Elem a = 0; a < 125; ++a) EXPECT_EQ(f.from_coeffs(f.coeffs(a)), a);
}

}  // namespace
}  // namespace unitconv
