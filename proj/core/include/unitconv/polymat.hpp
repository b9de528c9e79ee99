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

#ifndef UNITCONV_POLYMAT_HPP_
#define UNITCONV_POLYMAT_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "unitconv/matrix.hpp"
#include "unitconv/scheme.hpp"

namespace unitconv {

// Univariate polynomials over a Field, little-endian and trimmed.
namespace upoly {

using Poly = std::vector<Elem>;

void trim(Poly& a);
// -1 for the zero polynomial.
int degree(const Poly& a);
Poly add(const Field& f, const Poly& a, const Poly& b);
Poly sub(const Field& f, const Poly& a, const Poly& b);
Poly mul(const Field& f, const Poly& a, const Poly& b);
Poly scale(const Field& f, const Poly& a, Elem s);
// Quotient and remainder; b must be nonzero.
void divmod(const Field& f, const Poly& a, const Poly& b, Poly& quot, Poly& rem);

}  // namespace upoly

// Polynomial matrix sum_k B_k z^k, stored as its coefficient blocks with
// trailing zero blocks removed.
class PolyMatrix {
 public:
  PolyMatrix() = default;
  PolyMatrix(Field field, std::size_t rows, std::size_t cols);
  explicit PolyMatrix(Matrix constant);
  // All blocks must share field and shape; at least one block.
  static PolyMatrix from_blocks(std::vector<Matrix> blocks);
  static PolyMatrix identity(const Field& field, std::size_t n);

  const Field& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  // -1 for the zero matrix.
  int degree() const { return static_cast<int>(blocks_.size()) - 1; }
  bool is_zero() const { return blocks_.empty(); }

  const std::vector<Matrix>& blocks() const { return blocks_; }
  // Coefficient of z^k; a zero matrix beyond the degree.
  Matrix block(std::size_t k) const;

  upoly::Poly entry(std::size_t i, std::size_t j) const;
  void set_entry(std::size_t i, std::size_t j, const upoly::Poly& p);

  PolyMatrix transpose() const;
  PolyMatrix select_rows(std::span<const std::size_t> idx) const;
  PolyMatrix select_cols(std::span<const std::size_t> idx) const;
  // Multiplication by z^k.
  PolyMatrix shifted(std::size_t k) const;
  static PolyMatrix hstack(std::span<const PolyMatrix> parts);
  static PolyMatrix vstack(std::span<const PolyMatrix> parts);

  friend bool operator==(const PolyMatrix& a, const PolyMatrix& b);
  friend PolyMatrix operator+(const PolyMatrix& a, const PolyMatrix& b);
  friend PolyMatrix operator-(const PolyMatrix& a, const PolyMatrix& b);
  friend PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b);

 private:
  void trim();
  Field field_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Matrix> blocks_;
};

// Laurent polynomial matrix z^offset sum_k B_k z^k, canonical: lowest and
// highest blocks nonzero; the zero matrix has no blocks and offset 0.
class LaurentMatrix {
 public:
  LaurentMatrix() = default;
  LaurentMatrix(Field field, std::size_t rows, std::size_t cols);
  LaurentMatrix(const PolyMatrix& p, int offset = 0);  // NOLINT: implicit by design
  static LaurentMatrix from_blocks(int offset, std::vector<Matrix> blocks);

  const Field& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  int offset() const { return offset_; }
  // Highest exponent; meaningless for the zero matrix.
  int top() const { return offset_ + static_cast<int>(blocks_.size()) - 1; }
  bool is_zero() const { return blocks_.empty(); }
  const std::vector<Matrix>& blocks() const { return blocks_; }
  // Coefficient of z^k.
  Matrix coefficient(int k) const;

  bool is_polynomial() const { return is_zero() || offset_ >= 0; }
  // Throws kInvalidArgument when a negative power is present.
  PolyMatrix to_poly() const;

  LaurentMatrix shifted(int k) const;
  LaurentMatrix transpose() const;
  // A(z^{-1})^T.
  LaurentMatrix conjugate_transpose() const;

  friend bool operator==(const LaurentMatrix& a, const LaurentMatrix& b);
  friend LaurentMatrix operator+(const LaurentMatrix& a, const LaurentMatrix& b);
  friend LaurentMatrix operator-(const LaurentMatrix& a, const LaurentMatrix& b);

 private:
  void canonicalize();
  Field field_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  int offset_ = 0;
  std::vector<Matrix> blocks_;
};

// Exact convolution of coefficient blocks; offsets add.
LaurentMatrix poly_mul(const LaurentMatrix& a, const LaurentMatrix& b);

// G[z] = sum_i U[E_i] z^i.
PolyMatrix assemble_generator(const UnitScheme& unit, const SelectionScheme& scheme);

// Right inverse from the structure of the scheme. Disjoint schemes give the
// constant V[:, E_0]. For UniqueRow schemes G V[:, E_0] = I + N and, when N is
// nilpotent, H = V[:, E_0] (I - N + N^2 - ...). Otherwise the general method
// is used. Throws kConditionNotMet for Unknown schemes and kCatastrophic when
// no polynomial right inverse exists. G H = I is checked before returning.
// `method`, when given, receives "disjoint", "neumann" or "general".
PolyMatrix right_inverse_structured(const SelectionScheme& scheme, const UnitScheme& unit,
                                   std::string* method = nullptr);

// Column reduction of G over F[z] to [L | 0] = G Q with Q unimodular.
struct ColumnReduction {
  PolyMatrix L;  // r x r lower triangular
  PolyMatrix Q;  // n x n unimodular
  bool full_rank = false;
};
ColumnReduction column_reduce(const PolyMatrix& g);

// A polynomial right inverse when one exists: exactly when every diagonal
// entry of L is a nonzero constant.
std::optional<PolyMatrix> right_invertible_general(const PolyMatrix& g);

// Basis of the polynomial kernel {x : G x = 0}: the last n - r columns of Q.
PolyMatrix polynomial_kernel(const PolyMatrix& g);

// n x (n-r) check matrix K with columns for j not in E_0, ascending:
// K_j = f_j - V[:, E_0] W M_j, where M_j = G f_j and W = (I + N)^{-1}
// (W = I for disjoint schemes). Requires Disjoint, or UniqueRow with N
// nilpotent; otherwise kConditionNotMet. G K = 0 and K(0) of full column rank
// are checked before returning.
PolyMatrix check_matrix(const SelectionScheme& scheme, const UnitScheme& unit);

}  // namespace unitconv

#endif  // UNITCONV_POLYMAT_HPP_
