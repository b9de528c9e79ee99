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

#include "unitconv/distance.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "unitconv/design.hpp"
#include "unitconv/error.hpp"

namespace unitconv {
namespace {

// Minimum weight over every nonzero input of degree <= max_degree, convolving
// the coefficient blocks directly.
std::uint64_t brute_force_free_distance(const PolyMatrix& g, std::size_t max_degree) {
  const Field& f = g.field();
  const std::uint64_t q = f.cardinality();
  const std::size_t r = g.rows(), n = g.cols();
  const std::size_t mu = static_cast<std::size_t>(g.degree());
  const std::size_t len = max_degree + 1;
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < r * len; ++i) total *= q;
  std::vector<Elem> digits(r * len);
  std::uint64_t best = ~std::uint64_t{0};
  for (std::uint64_t idx = 1; idx < total; ++idx) {
    std::uint64_t x = idx;
    for (auto& d : digits) {
      d = static_cast<Elem>(x % q);
      x /= q;
    }
    std::uint64_t w = 0;
    for (std::size_t s = 0; s < len + mu; ++s) {
      for (std::size_t j = 0; j < n; ++j) {
        Elem c = 0;
        for (std::size_t i = 0; i <= mu && i <= s; ++i) {
          if (s - i >= len) continue;
          const Matrix& e = g.blocks()[i];
          for (std::size_t k = 0; k < r; ++k) c = f.add(c, f.mul(digits[(s - i) * r + k], e(k, j)));
        }
        w += c != 0;
      }
    }
    best = std::min(best, w);
  }
  return best;
}

const UnitScheme& f5() {
  static const UnitScheme u = UnitScheme::fourier(make_field(11), 5);
  return u;
}

const UnitScheme& f11() {
  static const UnitScheme u = UnitScheme::fourier(make_field(23), 11);
  return u;
}

const UnitScheme& f7() {
  static const UnitScheme u = UnitScheme::fourier(fourier_field_for_length(7, 3).field, 7);
  return u;
}

SelectionScheme full_row(std::size_t n) {
  std::vector<std::vector<std::size_t>> t;
  for (std::size_t i = 0; i < n; ++i) t.push_back({i});
  return SelectionScheme(t);
}

void expect_witness(const ConvCode& c, const DistanceReport& rep) {
  ASSERT_FALSE(rep.witness.empty());
  EXPECT_EQ(codeword_weight(c.G, rep.witness), rep.upper);
}

TEST(FreeDistanceTest, FullRowLengthThree) {
  const UnitScheme f3 = UnitScheme::fourier(make_field(7), 3);
  const ConvCode c = build_generator(f3, full_row(3));
  const DistanceReport rep = free_distance_exact(c);
  EXPECT_EQ(rep.upper, 9u);
  EXPECT_TRUE(rep.exact);
  EXPECT_EQ(rep.method, DistanceMethod::kTrellis);
  expect_witness(c, rep);
  EXPECT_EQ(brute_force_free_distance(c.G, 2 * c.mu + 2), 9u);
}

TEST(FreeDistanceTest, FullRowLengthFive) {
  const ConvCode c = build_generator(f5(), full_row(5));
  const DistanceReport rep = free_distance_exact(c);
  EXPECT_EQ(rep.upper, 25u);
  expect_witness(c, rep);
  EXPECT_EQ(rep.upper, gsb(5, 1, 4));
}

TEST(FreeDistanceTest, RateTwoFifths) {
  const ConvCode c = build_generator(f5(), SelectionScheme({{0, 1}, {2, 3}}));
  const DistanceReport rep = free_distance_exact(c);
  EXPECT_EQ(rep.lower, 8u);
  EXPECT_EQ(rep.upper, 8u);
  expect_witness(c, rep);
}

TEST(FreeDistanceTest, MemoryZeroIsBlockDistance) {
  const ConvCode c = build_generator(f5(), SelectionScheme({{0, 1}}));
  const DistanceReport rep = free_distance_exact(c);
  EXPECT_EQ(rep.upper, 4u);
  EXPECT_EQ(rep.method, DistanceMethod::kLinear);
  expect_witness(c, rep);
}

TEST(FreeDistanceTest, CatastrophicEncoderRejected) {
  // (1 + z)(1, 1): the input 1/(1 + z) has a weight-2 image.
  const Field f2 = make_field(2);
  const Matrix ones = Matrix::from_ints(f2, {{1, 1}});
  const ConvCode c = ConvCode::from_generator(PolyMatrix::from_blocks({ones, ones}));
  try {
    free_distance_exact(c);
    FAIL() << "expected kCatastrophic";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kCatastrophic);
  }
}

TEST(FreeDistanceTest, StateGuard) {
  const ConvCode c = build_generator(f11(), SelectionScheme({{0, 1, 2, 3, 4}, {5, 6, 7, 8, 9}}));
  try {
    free_distance_exact(c);
    FAIL() << "expected kGuardExceeded";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kGuardExceeded);
  }
}

// Random codes small enough for the oracle.
TEST(FreeDistanceTest, TrellisMatchesBruteForce) {
  struct Shape {
    std::uint32_t q;
    std::size_t r, n, mu;
  };
  const std::vector<Shape> shapes = {{2, 1, 2, 1}, {2, 1, 3, 2}, {2, 2, 3, 1}, {2, 2, 4, 2},
                                     {3, 1, 3, 2}, {3, 2, 3, 1}, {5, 1, 3, 2}, {7, 1, 2, 1}};
  std::mt19937 rng(20260501);
  int checked = 0, catastrophic = 0;
  for (int trial = 0; trial < 80; ++trial) {
    const Shape s = shapes[static_cast<std::size_t>(trial) % shapes.size()];
    const Field f = make_field(s.q);
    std::vector<Matrix> blocks;
    for (std::size_t i = 0; i <= s.mu; ++i) {
      Matrix e(f, s.r, s.n);
      for (std::size_t a = 0; a < s.r; ++a)
        for (std::size_t b = 0; b < s.n; ++b) e(a, b) = static_cast<Elem>(rng() % s.q);
      blocks.push_back(e);
    }
    const ConvCode c = ConvCode::from_generator(PolyMatrix::from_blocks(blocks));
    if (c.mu == 0 || rank(c.G.block(0)) < s.r) continue;
    DistanceReport rep;
    try {
      rep = free_distance_exact(c);
    } catch (const Error& e) {
      ASSERT_EQ(e.code(), ErrorCode::kCatastrophic);
      EXPECT_FALSE(right_invertible_general(c.G).has_value());
      ++catastrophic;
      continue;
    }
    EXPECT_EQ(rep.upper, brute_force_free_distance(c.G, 2 * c.mu + 2)) << "trial " << trial;
    expect_witness(c, rep);
    ++checked;
  }
  EXPECT_GT(checked, 30);
  RecordProperty("catastrophic", catastrophic);
}

TEST(DistanceBoundsTest, SqueezeLengthEleven) {
  const ConvCode c = build_generator(f11(), SelectionScheme({{0, 1, 2, 3, 4}, {5, 6, 7, 8, 9}}));
  const DistanceReport rep = free_distance_bounds(c, &f11());
  EXPECT_EQ(rep.lower, 14u);
  EXPECT_EQ(rep.upper, 14u);
  EXPECT_TRUE(rep.exact);
  expect_witness(c, rep);
}

TEST(DistanceBoundsTest, FullRowMeetsGsb) {
  const ConvCode c = build_generator(f5(), full_row(5));
  const DistanceReport rep = free_distance_bounds(c, &f5());
  EXPECT_EQ(rep.lower, 25u);
  EXPECT_EQ(rep.upper, 25u);
  EXPECT_TRUE(rep.exact);
}

TEST(DistanceBoundsTest, LengthSevenMemoryTwo) {
  const ConvCode c = build_generator(f7(), SelectionScheme({{0, 1}, {1, 2}, {2, 3}}));
  const DistanceReport rep = free_distance_bounds(c, &f7());
  // Both end blocks are (7,2,6) codes.
  EXPECT_EQ(rep.lower, 12u);
  EXPECT_LE(rep.upper, 18u);
  EXPECT_FALSE(rep.exact);
  expect_witness(c, rep);
  // The shared row e1 cancels in (1,0) + (0,-1)z, leaving e0 - e3 z^3.
  const Field& f = c.field;
  const InputSequence cancel = {{1, 0}, {0, f.neg(1)}};
  EXPECT_EQ(codeword_weight(c.G, cancel), 14u);
  EXPECT_EQ(rep.upper, 14u);
}

TEST(DistanceBoundsTest, BoundsBracketExact) {
  for (const auto& text : {"0,1/2,3", "0,1/1,2", "0/1/2/3/4", "0,1,2/2,3,4", "0,1/2,3/4,0"}) {
    const ConvCode c = build_generator(f5(), SelectionScheme::parse(text));
    const DistanceReport exact = free_distance_exact(c);
    const DistanceReport b = free_distance_bounds(c, &f5());
    EXPECT_LE(b.lower, exact.upper) << text;
    EXPECT_GE(b.upper, exact.upper) << text;
    EXPECT_LE(exact.upper, gsb(c.n, c.r, c.delta)) << text;
  }
}

TEST(BoundedSearchTest, FullRowLengthElevenLowDegree) {
  const ConvCode c = build_generator(f11(), full_row(11));
  SearchLimits lim;
  lim.max_degree = 3;
  lim.max_support = 4;
  const SearchResult s = bounded_search(c.G, lim);
  EXPECT_TRUE(s.complete);
  EXPECT_EQ(s.weight, 121u);
  EXPECT_EQ(codeword_weight(c.G, {{1}}), 121u);
}

TEST(SupportProfileTest, RateTwoFifths) {
  const ConvCode c = build_generator(f5(), SelectionScheme({{0, 1}, {2, 3}}));
  const SupportProfile p2 = support_profile(c, 2, &f5());
  EXPECT_EQ(p2.upper, 10u);
  EXPECT_EQ(p2.lower, 10u);
  EXPECT_TRUE(p2.complete);
  EXPECT_EQ(codeword_weight(c.G, p2.witness), 10u);

  const SupportProfile p1 = support_profile(c, 1, &f5());
  SearchLimits lim;
  lim.max_degree = c.mu + 4;
  lim.max_support = 3;
  EXPECT_EQ(p1.upper, bounded_search(c.G, lim).weight);
  EXPECT_EQ(p1.upper, 8u);

  const SupportProfile p3 = support_profile(c, 3, &f5());
  EXPECT_LE(p1.upper, p2.upper);
  EXPECT_LE(p2.upper, p3.upper);
}

TEST(SupportProfileTest, LengthSevenRateThree) {
  const ConvCode c = build_generator(f7(), SelectionScheme({{0, 1, 2}, {3, 4, 5}}));
  const SupportProfile p = support_profile(c, 2, &f7());
  EXPECT_EQ(p.lower, 12u);
  EXPECT_GE(p.upper, p.lower);
  EXPECT_EQ(codeword_weight(c.G, p.witness), p.upper);
  std::size_t support = 0;
  for (const auto& b : p.witness)
    support += std::any_of(b.begin(), b.end(), [](Elem x) { return x != 0; });
  EXPECT_GE(support, 2u);
}

TEST(SupportProfileTest, LengthElevenRunBound) {
  const ConvCode c = build_generator(f11(), SelectionScheme({{0, 1, 2, 3, 4}, {5, 6, 7, 8, 9}}));
  const SupportProfile p = support_profile(c, 2, &f11());
  // 7 + 7 at the ends of a run plus at least 2 for the (11,10) middle code.
  EXPECT_EQ(p.lower, 16u);
  EXPECT_GE(p.upper, p.lower);
  EXPECT_EQ(codeword_weight(c.G, p.witness), p.upper);
}

}  // namespace
}  // namespace unitconv
