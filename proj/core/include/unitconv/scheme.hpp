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

#ifndef UNITCONV_SCHEME_HPP_
#define UNITCONV_SCHEME_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "unitconv/matrix.hpp"

namespace unitconv {

enum class ChebotarevStatus { kVerifiedTrue, kVerifiedFalse, kAssumed, kUnknown };

const char* chebotarev_status_name(ChebotarevStatus s);
ChebotarevStatus parse_chebotarev_status(const std::string& s);

// A pair (U, V) with UV = I. Rows of U are e_0..e_{n-1}, columns of V are
// f_0..f_{n-1}, so e_i f_j = [i == j].
class UnitScheme {
 public:
  UnitScheme() = default;

  // Throws kNotUnit unless UV = I.
  static UnitScheme from_inverse(Matrix U, Matrix V, std::string provenance = "explicit");
  // V = U^{-1}; throws kNotUnit when U is singular.
  static UnitScheme from_matrix(Matrix U, std::string provenance = "explicit");
  // V = U^T; throws kNotOrthogonal.
  static UnitScheme from_orthogonal(Matrix U, std::string provenance = "orthogonal");
  // Fourier pair over `field`. The Chebotarev status is verified exhaustively
  // when n <= guard, otherwise assumed when n is prime and the field is one
  // of the two known-good constructions, otherwise unknown.
  static UnitScheme fourier(const Field& field, std::size_t n, std::size_t guard = 13);

  const Field& field() const { return U_.field(); }
  std::size_t n() const { return U_.rows(); }
  const Matrix& U() const { return U_; }
  const Matrix& V() const { return V_; }
  const std::string& provenance() const { return provenance_; }

  ChebotarevStatus chebotarev_status() const { return status_; }
  void set_chebotarev_status(ChebotarevStatus s) { status_ = s; }
  // Exhaustive check of V; updates and returns the status.
  ChebotarevStatus verify_chebotarev(std::size_t guard = 13, unsigned jobs = 1);

  std::optional<std::size_t> block_size() const { return block_size_; }
  std::size_t block_count() const { return block_size_ ? n() / *block_size_ : 0; }
  // Throws kNoBlockPartition unless b divides n.
  UnitScheme with_blocks(std::size_t b) const;

 private:
  Matrix U_;
  Matrix V_;
  std::string provenance_;
  ChebotarevStatus status_ = ChebotarevStatus::kUnknown;
  std::optional<std::size_t> block_size_;
};

// Index tuples (E_0, ..., E_s) selecting rows of U for each power of z.
class SelectionScheme {
 public:
  SelectionScheme() = default;
  // Throws kInvalidArgument on empty input, unequal tuple lengths or
  // repeated indices inside a tuple.
  explicit SelectionScheme(std::vector<std::vector<std::size_t>> tuples);

  const std::vector<std::vector<std::size_t>>& tuples() const { return tuples_; }
  const std::vector<std::size_t>& tuple(std::size_t i) const { return tuples_[i]; }
  std::size_t r() const { return tuples_.empty() ? 0 : tuples_.front().size(); }
  std::size_t mu() const { return tuples_.empty() ? 0 : tuples_.size() - 1; }
  std::size_t delta() const { return r() * mu(); }

  // Block tuples the rows were expanded from, if any.
  const std::optional<std::vector<std::vector<std::size_t>>>& block_tuples() const {
    return block_tuples_;
  }
  std::optional<std::size_t> block_size() const { return block_size_; }

  // Throws kIndexOutOfRange if some index is >= n.
  void validate(std::size_t n) const;

  // "0,1/2,3"
  std::string to_string() const;
  static SelectionScheme parse(const std::string& text);

  friend bool operator==(const SelectionScheme& a, const SelectionScheme& b) {
    return a.tuples_ == b.tuples_;
  }

 private:
  friend SelectionScheme block_scheme(const UnitScheme&,
                                      const std::vector<std::vector<std::size_t>>&);
  std::vector<std::vector<std::size_t>> tuples_;
  std::optional<std::vector<std::vector<std::size_t>>> block_tuples_;
  std::optional<std::size_t> block_size_;
};

enum class SelectionClass { kDisjoint, kUniqueRow, kUnknown };

const char* selection_class_name(SelectionClass c);

// Disjoint: E_0 meets no E_i (i >= 1). UniqueRow: some index of E_0 is absent
// from every E_i (i >= 1). Otherwise Unknown.
SelectionClass classify_selection(const SelectionScheme& scheme);

// Expands block tuples to row tuples: block k covers rows kb..kb+b-1.
SelectionScheme block_scheme(const UnitScheme& unit,
                             const std::vector<std::vector<std::size_t>>& blocks);

}  // namespace unitconv

#endif  // UNITCONV_SCHEME_HPP_
