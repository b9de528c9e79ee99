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

#ifndef UNITCONV_MATRIX_HPP_
#define UNITCONV_MATRIX_HPP_

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "unitconv/field.hpp"

namespace unitconv {

// Dense row-major matrix over a finite field.
class Matrix {
 public:
  Matrix() = default;
  Matrix(Field field, std::size_t rows, std::size_t cols);

  static Matrix identity(const Field& field, std::size_t n);
  // Entries are reduced into the prime subfield.
  static Matrix from_ints(const Field& field,
                          const std::vector<std::vector<std::int64_t>>& rows);

  const Field& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Elem operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  Elem& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }

  std::span<const Elem> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }
  std::span<Elem> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
  const std::vector<Elem>& data() const { return data_; }

  Matrix transpose() const;
  Matrix select_rows(std::span<const std::size_t> idx) const;
  Matrix select_cols(std::span<const std::size_t> idx) const;
  Matrix submatrix(std::span<const std::size_t> rows, std::span<const std::size_t> cols) const;
  Matrix scaled(Elem s) const;

  bool is_zero() const;
  bool is_identity() const;
  // Number of nonzero entries in row i / column j.
  std::size_t row_weight(std::size_t i) const;
  std::size_t col_weight(std::size_t j) const;

  static Matrix vstack(std::span<const Matrix> parts);
  static Matrix hstack(std::span<const Matrix> parts);

  friend bool operator==(const Matrix& a, const Matrix& b);
  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const Matrix& a, const Matrix& b);

 private:
  Field field_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Elem> data_;
};

// Hamming weight of a vector.
std::size_t weight(std::span<const Elem> v);

std::size_t rank(const Matrix& m);
Elem determinant(const Matrix& m);
// Throws Error(kSingular).
Matrix invert(const Matrix& m);

struct FourierPair {
  Matrix U;  // (i, j) -> w^{ij}
  Matrix V;  // (i, j) -> n^{-1} w^{-ij}, so that U V = I
  FieldElement root;
};

FourierPair fourier_matrix(const Field& field, std::size_t n);

struct ChebotarevResult {
  bool holds = true;
  std::uint64_t determinants = 0;
  // First singular square submatrix in (size, row subset, column subset)
  // lexicographic order.
  std::vector<std::size_t> failing_rows;
  std::vector<std::size_t> failing_cols;

  explicit operator bool() const { return holds; }
};

// Every square submatrix nonsingular. Costs sum_k C(n,k)^2 determinants, so
// n is capped by `guard` (Error kGuardExceeded).
ChebotarevResult chebotarev_check(const Matrix& m, std::size_t guard = 13, unsigned jobs = 1);

// Minimum Hamming weight of uG over nonzero u. G must have full row rank and
// q^rows must not exceed `guard`.
std::uint32_t linear_min_distance(const Matrix& g, std::uint64_t guard = 10'000'000,
                                  unsigned jobs = 1);

bool is_orthogonal(const Matrix& u);

// Text format: "p m rows cols", then the modulus coefficients when m > 1,
// then one row per line. Extension elements are colon-joined coefficients.
std::string write_matrix_text(const Matrix& m);
Matrix read_matrix_text(std::string_view text);

}  // namespace unitconv

#endif  // UNITCONV_MATRIX_HPP_
