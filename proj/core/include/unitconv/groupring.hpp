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

#ifndef UNITCONV_GROUPRING_HPP_
#define UNITCONV_GROUPRING_HPP_

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "unitconv/matrix.hpp"

namespace unitconv {

enum class GroupKind { kCyclic, kProduct, kDihedral };

// Finite group with elements numbered 0..order-1, 0 the identity.
//   cyclic C_n:     a^i -> i
//   product C_nxC_m: g^i h^j -> j n + i (outer h, inner g)
//   dihedral D_2n:  b^s a^i -> s n + i, with b a = a^{-1} b
class GroupSpec {
 public:
  GroupSpec() = default;
  static GroupSpec cyclic(std::size_t n);
  static GroupSpec product(std::size_t n, std::size_t m);
  // Dihedral group of order 2n.
  static GroupSpec dihedral(std::size_t n);
  // "C8", "C204xC4", "D8".
  static GroupSpec parse(const std::string& name);

  GroupKind kind() const { return kind_; }
  std::size_t order() const { return kind_ == GroupKind::kCyclic ? n_ : (kind_ == GroupKind::kProduct ? n_ * m_ : 2 * n_); }
  std::size_t n() const { return n_; }
  std::size_t m() const { return m_; }
  std::string name() const;

  std::size_t mul(std::size_t x, std::size_t y) const;
  std::size_t inverse(std::size_t x) const;
  // Element from exponents: (i) for cyclic, (i, j) = g^i h^j for products,
  // (i, s) = b^s a^i for dihedral. Exponents are reduced.
  std::size_t element(std::int64_t first, std::int64_t second = 0) const;
  std::pair<std::size_t, std::size_t> exponents(std::size_t x) const;
  std::size_t arity() const { return kind_ == GroupKind::kCyclic ? 1 : 2; }

  friend bool operator==(const GroupSpec& a, const GroupSpec& b) {
    return a.kind_ == b.kind_ && a.n_ == b.n_ && a.m_ == b.m_;
  }

 private:
  GroupKind kind_ = GroupKind::kCyclic;
  std::size_t n_ = 1;
  std::size_t m_ = 1;
};

// Sparse element sum_g c_g g of the group ring F G.
class GroupRingElement {
 public:
  GroupRingElement() = default;
  GroupRingElement(Field field, GroupSpec group);
  static GroupRingElement one(const Field& field, const GroupSpec& group);

  const Field& field() const { return field_; }
  const GroupSpec& group() const { return group_; }
  const std::map<std::size_t, Elem>& terms() const { return terms_; }
  std::size_t support() const { return terms_.size(); }
  Elem coeff(std::size_t g) const;
  // Adds c to the coefficient of g; zeros are never stored.
  void add_term(std::size_t g, Elem c);

  friend bool operator==(const GroupRingElement& a, const GroupRingElement& b) {
    return a.group_ == b.group_ && a.field_ == b.field_ && a.terms_ == b.terms_;
  }

 private:
  Field field_;
  GroupSpec group_;
  std::map<std::size_t, Elem> terms_;
};

GroupRingElement gr_add(const GroupRingElement& a, const GroupRingElement& b);
// Throws kGroupMismatch for different groups or fields.
GroupRingElement gr_mul(const GroupRingElement& a, const GroupRingElement& b);
// Coefficient of g moves to g^{-1}.
GroupRingElement gr_transpose(const GroupRingElement& a);
// Entry (g, h) = coefficient of g^{-1} h.
Matrix to_matrix(const GroupRingElement& a);
// Via inversion of to_matrix(a); absent for zero divisors.
std::optional<GroupRingElement> gr_inverse(const GroupRingElement& a);

struct TannerReport {
  std::vector<std::size_t> column_weights;
  std::vector<std::size_t> row_weights;
  // Two columns sharing at least two nonzero rows.
  bool has_4cycle = false;
};

TannerReport tanner_diagnostics(const Matrix& m);

// "group=C204xC4 field=2" then one "coeff e1 [e2]" line per term, exponents
// as in GroupSpec::element. Lines starting with '#' are ignored.
std::string write_group_ring_text(const GroupRingElement& a);
GroupRingElement read_group_ring_text(std::string_view text);

}  // namespace unitconv

#endif  // UNITCONV_GROUPRING_HPP_
