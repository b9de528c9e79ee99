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

#include "unitconv/design.hpp"

#include <gtest/gtest.h>

namespace unitconv {
namespace {

const UnitScheme& f5() {
  static const UnitScheme u = UnitScheme::fourier(make_field(11), 5);
  return u;
}

TEST(GsbTest, Table) {
  EXPECT_EQ(gsb(5, 2, 2), 9u);
  EXPECT_EQ(gsb(5, 2, 4), 14u);
  EXPECT_EQ(gsb(5, 3, 3), 8u);
  EXPECT_EQ(gsb(7, 3, 3), 12u);
  EXPECT_EQ(gsb(7, 2, 4), 20u);
  EXPECT_EQ(gsb(7, 2, 6), 27u);
  EXPECT_EQ(gsb(11, 5, 5), 18u);
  EXPECT_EQ(gsb(11, 4, 4), 19u);
  EXPECT_EQ(gsb(11, 3, 6), 31u);
  EXPECT_EQ(gsb(11, 4, 8), 30u);
  EXPECT_EQ(gsb(11, 5, 10), 29u);
  EXPECT_EQ(gsb(11, 2, 8), 54u);
  for (std::uint64_t n = 2; n < 30; ++n) {
    EXPECT_EQ(gsb(n, 1, n - 1), n * n);
    for (std::uint64_t r = 1; r < n; ++r) EXPECT_EQ(gsb(n, r, 0), n - r + 1);
  }
  EXPECT_THROW(gsb(4, 4, 1), Error);
}

TEST(SchemeTest, ClassifyExamples) {
  EXPECT_EQ(classify_selection(SelectionScheme({{0, 1}, {2, 3}, {4, 5}})), SelectionClass::kDisjoint);
  EXPECT_EQ(classify_selection(SelectionScheme({{0, 1}, {2, 3}, {4, 5}, {5, 6}})), SelectionClass::kDisjoint);
  EXPECT_EQ(classify_selection(SelectionScheme({{0, 1}, {1, 2}})), SelectionClass::kUniqueRow);
  EXPECT_EQ(classify_selection(SelectionScheme({{0, 1}, {1, 2}, {0, 3}})), SelectionClass::kUnknown);
}

TEST(SchemeTest, ParseAndValidate) {
  const auto s = SelectionScheme::parse("0,1/2,3/4,5");
  EXPECT_EQ(s.r(), 2u);
  EXPECT_EQ(s.mu(), 2u);
  EXPECT_EQ(s.delta(), 4u);
  EXPECT_EQ(s.to_string(), "0,1/2,3/4,5");
  EXPECT_THROW(SelectionScheme::parse("0,1/2"), Error);
  EXPECT_THROW(SelectionScheme::parse("0,0/1,2"), Error);
  EXPECT_THROW(SelectionScheme::parse("0,x"), Error);
  try {
    build_generator(f5(), SelectionScheme::parse("0,1/2,7"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kIndexOutOfRange);
  }
}

TEST(BuildGeneratorTest, Parameters) {
  const UnitScheme f3 = UnitScheme::fourier(make_field(7), 3);
  EXPECT_EQ(build_generator(f3, SelectionScheme({{0}, {1}, {2}})).parameters(), "(3,1,2;2)");
  EXPECT_EQ(build_generator(f5(), SelectionScheme({{0, 1}, {2, 3}})).parameters(), "(5,2,2;1)");
  const UnitScheme f11 = UnitScheme::fourier(make_field(23), 11);
  EXPECT_EQ(build_generator(f11, SelectionScheme({{0, 1, 2, 3, 4}, {5, 6, 7, 8, 9}})).parameters(),
            "(11,5,5;1)");
}

TEST(BuildGeneratorTest, FourierChebotarevStatus) {
  EXPECT_EQ(f5().chebotarev_status(), ChebotarevStatus::kVerifiedTrue);
  EXPECT_EQ(UnitScheme::fourier(make_field(5), 4).chebotarev_status(), ChebotarevStatus::kVerifiedFalse);
  EXPECT_EQ(UnitScheme::fourier(make_field(47), 23).chebotarev_status(), ChebotarevStatus::kAssumed);
}

TEST(AutoDesignTest, Examples) {
  EXPECT_EQ(auto_design(f5(), 2, 1), SelectionScheme({{0, 1}, {2, 3}}));
  const UnitScheme f7 = UnitScheme::fourier(fourier_field_for_length(7, 3).field, 7);
  EXPECT_EQ(auto_design(f7, 2, 2), SelectionScheme({{0, 1}, {2, 3}, {4, 5}}));
  const UnitScheme f3 = UnitScheme::fourier(make_field(7), 3);
  const SelectionScheme s = auto_design(f3, 2, 2);
  EXPECT_EQ(s, SelectionScheme({{0, 1}, {1, 2}, {2, 1}}));
  EXPECT_NE(classify_selection(s), SelectionClass::kUnknown);
  EXPECT_EQ(auto_design(f7, 3, 4), auto_design(f7, 3, 4));
  try {
    auto_design(f3, 3, 1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kInfeasibleRate);
  }
}

TEST(AutoDesignTest, ResultsAreNoncatastrophic) {
  const UnitScheme f7 = UnitScheme::fourier(fourier_field_for_length(7, 3).field, 7);
  for (std::size_t r = 1; r < 7; ++r)
    for (std::size_t mu = 0; mu <= 4; ++mu) {
      const SelectionScheme s = auto_design(f7, r, mu);
      EXPECT_EQ(s.mu(), mu);
      ConvCode code = build_generator(f7, s);
      EXPECT_NO_THROW(certify(code, &f7)) << s.to_string();
    }
}

TEST(CertifyTest, AttachesVerifiedCertificates) {
  ConvCode code = build_generator(f5(), SelectionScheme({{0, 1}, {1, 2}}));
  certify(code, &f5());
  ASSERT_TRUE(code.right_inverse && code.check_matrix);
  EXPECT_EQ(code.right_inverse_method, "neumann");
  EXPECT_NO_THROW(verify_certificates(code));
  ConvCode bare = ConvCode::from_generator(code.G);
  certify(bare, nullptr);
  EXPECT_EQ(bare.right_inverse_method, "general");
  EXPECT_EQ(bare.check_matrix_method, "kernel");
  EXPECT_NO_THROW(verify_certificates(bare));
}

}  // namespace
}  // namespace unitconv
