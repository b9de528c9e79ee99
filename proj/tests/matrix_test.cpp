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

#include "unitconv/matrix.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

namespace unitconv {
namespace {

Matrix random_matrix(const Field& f, std::size_t r, std::size_t c, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::uint64_t> d(0, f.cardinality() - 1);
  Matrix m(f, r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = static_cast<Elem>(d(rng));
  return m;
}

// Leibniz expansion.
Elem leibniz(const Matrix& m) {
  const Field& f = m.field();
  std::vector<std::size_t> perm(m.rows());
  std::iota(perm.begin(), perm.end(), 0);
  Elem total = 0;
  do {
    Elem term = 1;
    for (std::size_t i = 0; i < perm.size(); ++i) term = f.mul(term, m(i, perm[i]));
    std::size_t inversions = 0;
    for (std::size_t i = 0; i < perm.size(); ++i)
      for (std::size_t j = i + 1; j < perm.size(); ++j) inversions += perm[i] > perm[j];
    total = inversions % 2 ? f.sub(total, term) : f.add(total, term);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

TEST(MatrixTest, DeterminantMatchesLeibniz) {
  std::mt19937_64 rng(11);
  for (auto [p, m] : {std::pair{2u, 1u}, std::pair{7u, 1u}, std::pair{3u, 2u}, std::pair{2u, 4u}}) {
    const Field f = make_field(p, m);
    for (int t = 0; t < 40; ++t) {
      const Matrix a = random_matrix(f, 4, 4, rng);
      ASSERT_EQ(determinant(a), leibniz(a));
      ASSERT_EQ(rank(a) == 4, determinant(a) != 0);
    }
  }
}

TEST(MatrixTest, InverseRoundTrip) {
  std::mt19937_64 rng(3);
  for (auto [p, m] : {std::pair{2u, 1u}, std::pair{5u, 1u}, std::pair{2u, 3u}}) {
    const Field f = make_field(p, m);
    int found = 0;
    while (found < 10) {
      const Matrix a = random_matrix(f, 70, 70, rng);
      if (rank(a) != 70) continue;
      ++found;
      EXPECT_TRUE((a * invert(a)).is_identity());
      EXPECT_TRUE((invert(a) * a).is_identity());
    }
  }
  const Field f2 = make_field(2);
  try {
    invert(Matrix(f2, 3, 3));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kSingular);
  }
}

TEST(MatrixTest, FourierOverGF7) {
  const Field f = make_field(7);
  const auto fp = fourier_matrix(f, 3);
  EXPECT_EQ(fp.U, Matrix::from_ints(f, {{1, 1, 1}, {1, 2, 4}, {1, 4, 2}}));
  EXPECT_EQ(fp.V, Matrix::from_ints(f, {{5, 5, 5}, {5, 6, 3}, {5, 3, 6}}));
  EXPECT_TRUE((fp.U * fp.V).is_identity());
}

TEST(MatrixTest, ChebotarevHoldsForPrimeFourier) {
  const auto f3 = fourier_matrix(make_field(7), 3);
  EXPECT_TRUE(chebotarev_check(f3.U).holds);
  const auto f5 = fourier_matrix(make_field(11), 5);
  EXPECT_TRUE(chebotarev_check(f5.U).holds);
  EXPECT_TRUE(chebotarev_check(fourier_matrix(make_field(2, 4), 5).U).holds);
}

TEST(MatrixTest, ChebotarevFailsForComposite) {
  // n = 4 over GF(5): the 2x2 minor on rows {0,2}, cols {0,2} is 1-1 = 0.
  const auto f4 = fourier_matrix(make_field(5), 4);
  const auto r = chebotarev_check(f4.U);
  EXPECT_FALSE(r.holds);
  EXPECT_EQ(r.failing_rows, (std::vector<std::size_t>{0, 2}));
  EXPECT_EQ(r.failing_cols, (std::vector<std::size_t>{0, 2}));
  const auto threaded = chebotarev_check(f4.U, 13, 3);
  EXPECT_EQ(threaded.failing_rows, r.failing_rows);
  EXPECT_EQ(threaded.failing_cols, r.failing_cols);
}

TEST(MatrixTest, ChebotarevGuard) {
  const Field f = make_field(29);
  try {
    chebotarev_check(fourier_matrix(f, 14).U, 13);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kGuardExceeded);
  }
}

std::uint32_t brute_min_distance(const Matrix& g) {
  const Field& f = g.field();
  const std::uint64_t q = f.cardinality();
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < g.rows(); ++i) total *= q;
  std::uint32_t best = static_cast<std::uint32_t>(g.cols()) + 1;
  for (std::uint64_t code = 1; code < total; ++code) {
    std::vector<Elem> u(g.rows());
    std::uint64_t c = code;
    for (auto& x : u) {
      x = static_cast<Elem>(c % q);
      c /= q;
    }
    std::vector<Elem> w(g.cols(), 0);
    for (std::size_t i = 0; i < g.rows(); ++i)
      for (std::size_t j = 0; j < g.cols(); ++j) w[j] = f.add(w[j], f.mul(u[i], g(i, j)));
    best = std::min(best, static_cast<std::uint32_t>(weight(w)));
  }
  return best;
}

TEST(MatrixTest, LinearMinDistanceMatchesBruteForce) {
  std::mt19937_64 rng(5);
  for (auto p : {2u, 3u, 5u}) {
    const Field f = make_field(p);
    for (int t = 0; t < 30; ++t) {
      const std::size_t r = 1 + rng() % 3, n = r + rng() % 4;
      const Matrix g = random_matrix(f, r, n, rng);
      if (rank(g) != r) continue;
      ASSERT_EQ(linear_min_distance(g), brute_min_distance(g));
      ASSERT_EQ(linear_min_distance(g, 10'000'000, 2), brute_min_distance(g));
    }
  }
}

TEST(MatrixTest, MdsSubmatricesOfFourier) {
  const auto fp = fourier_matrix(make_field(23), 11);
  const std::vector<std::size_t> rows{1, 4, 7};
  EXPECT_EQ(linear_min_distance(fp.U.select_rows(rows)), 9u);
}

TEST(MatrixTest, TextRoundTrip) {
  std::mt19937_64 rng(9);
  for (auto [p, m] : {std::pair{11u, 1u}, std::pair{3u, 6u}}) {
    const Matrix a = random_matrix(make_field(p, m), 3, 5, rng);
    const Matrix b = read_matrix_text(write_matrix_text(a));
    EXPECT_EQ(a, b);
    EXPECT_EQ(write_matrix_text(a), write_matrix_text(b));
  }
  EXPECT_THROW(read_matrix_text("7 1 2 2\n1 2\n3"), Error);
}

TEST(MatrixTest, Orthogonality) {
  const Field f = make_field(3);
  EXPECT_TRUE(is_orthogonal(Matrix::from_ints(f, {{0, 1, 0}, {-1, 0, 0}, {0, 0, 1}})));
  EXPECT_FALSE(is_orthogonal(Matrix::from_ints(f, {{1, 1, 0}, {0, 1, 0}, {0, 0, 1}})));
}

}  // namespace
}  // namespace unitconv
