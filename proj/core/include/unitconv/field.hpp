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

#ifndef UNITCONV_FIELD_HPP_
#define UNITCONV_FIELD_HPP_

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "unitconv/error.hpp"

namespace unitconv {

// A field element is its coefficient vector over GF(p) in the basis
// 1, x, ..., x^{m-1}, packed little-endian into one base-p integer:
// value = c_0 + c_1 p + ... + c_{m-1} p^{m-1}. For prime fields the value is
// the residue itself.
using Elem = std::uint32_t;

namespace detail {

struct FieldData {
  std::uint32_t p = 2;
  std::uint32_t m = 1;
  std::uint64_t q = 2;
  std::vector<std::uint32_t> modulus;  // m+1 coefficients, monic; empty when m == 1
  Elem primitive = 1;

  // Log tables for extension fields of moderate size. exp_ has length
  // 2(q-1) so that log a + log b never needs a reduction.
  bool tables = false;
  std::vector<Elem> exp_;
  std::vector<std::uint32_t> log_;
  std::vector<std::uint32_t> zech_;  // log(1 + g^d), or kNoLog when 1 + g^d = 0
  static constexpr std::uint32_t kNoLog = 0xffffffffu;

  Elem slow_add(Elem a, Elem b) const;
  Elem slow_neg(Elem a) const;
  Elem slow_mul(Elem a, Elem b) const;
};

}  // namespace detail

class Field {
 public:
  // An empty handle; only valid after assignment from make_field().
  Field() = default;

  bool valid() const { return data_ != nullptr; }
  std::uint32_t characteristic() const { return data_->p; }
  std::uint32_t degree() const { return data_->m; }
  std::uint64_t cardinality() const { return data_->q; }
  const std::vector<std::uint32_t>& modulus() const { return data_->modulus; }
  bool is_prime_field() const { return data_->m == 1; }
  bool is_binary() const { return data_->q == 2; }

  Elem zero() const { return 0; }
  Elem one() const { return 1; }
  bool contains(std::uint64_t a) const { return a < data_->q; }

  Elem add(Elem a, Elem b) const {
    const auto& d = *data_;
    if (d.m == 1) {
      const std::uint32_t s = a + b;
      return s >= d.p ? s - d.p : s;
    }
    if (d.p == 2) return a ^ b;
    if (!d.tables) return d.slow_add(a, b);
    if (a == 0) return b;
    if (b == 0) return a;
    const std::uint32_t la = d.log_[a];
    std::uint32_t diff = d.log_[b] + static_cast<std::uint32_t>(d.q - 1) - la;
    if (diff >= d.q - 1) diff -= static_cast<std::uint32_t>(d.q - 1);
    const std::uint32_t z = d.zech_[diff];
    if (z == detail::FieldData::kNoLog) return 0;
    return d.exp_[la + z];
  }

  Elem neg(Elem a) const {
    const auto& d = *data_;
    if (a == 0) return 0;
    if (d.m == 1) return d.p - a;
    if (d.p == 2) return a;
    if (!d.tables) return d.slow_neg(a);
    return d.exp_[d.log_[a] + static_cast<std::uint32_t>((d.q - 1) / 2)];
  }

  Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }

  Elem mul(Elem a, Elem b) const {
    const auto& d = *data_;
    if (d.m == 1) {
      return static_cast<Elem>(static_cast<std::uint64_t>(a) * b % d.p);
    }
    if (a == 0 || b == 0) return 0;
    if (!d.tables) return d.slow_mul(a, b);
    return d.exp_[d.log_[a] + d.log_[b]];
  }

  // Throws Error(kInvalidArgument) for a == 0.
  Elem inv(Elem a) const;
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
  Elem pow(Elem a, std::uint64_t e) const;

  // Image of an integer in the prime subfield.
  Elem from_int(std::int64_t v) const;

  std::vector<std::uint32_t> coeffs(Elem a) const;
  Elem from_coeffs(std::span<const std::uint32_t> c) const;

  // Least primitive element in the packed-integer order.
  Elem primitive_element() const { return data_->primitive; }

  // "GF(11)" or "GF(2^4)".
  std::string name() const;

  friend bool operator==(const Field& a, const Field& b);

  // Reference arithmetic by schoolbook polynomial multiplication; always
  // available, used to cross-check the table path.
  Elem mul_reference(Elem a, Elem b) const;
  Elem add_reference(Elem a, Elem b) const;

 private:
  friend Field make_field(std::uint32_t, std::uint32_t,
                          std::optional<std::vector<std::uint32_t>>);
  std::shared_ptr<const detail::FieldData> data_;
};

class FieldElement {
 public:
  FieldElement(Field field, Elem value);

  const Field& field() const { return field_; }
  Elem value() const { return value_; }
  std::vector<std::uint32_t> coeffs() const { return field_.coeffs(value_); }
  bool is_zero() const { return value_ == 0; }

  FieldElement operator+(const FieldElement& o) const;
  FieldElement operator-(const FieldElement& o) const;
  FieldElement operator*(const FieldElement& o) const;
  FieldElement operator/(const FieldElement& o) const;
  FieldElement operator-() const;
  FieldElement pow(std::uint64_t e) const;
  FieldElement inverse() const;

  friend bool operator==(const FieldElement& a, const FieldElement& b) {
    return a.field_ == b.field_ && a.value_ == b.value_;
  }

 private:
  Field field_;
  Elem value_;
};

// Trial division.
bool is_prime(std::uint64_t n);

// Order of a modulo n; requires gcd(a, n) = 1.
std::uint64_t multiplicative_order(std::uint64_t a, std::uint64_t n);

// Builds GF(p^m). When m > 1 and no modulus is given, the least monic
// irreducible polynomial of degree m is used. A supplied modulus is
// little-endian with m+1 entries and must be monic and irreducible.
Field make_field(std::uint32_t p, std::uint32_t m = 1,
                 std::optional<std::vector<std::uint32_t>> modulus = std::nullopt);

// g^((q-1)/n) for the least primitive element g; multiplicative order n.
FieldElement root_of_unity(const Field& field, std::uint64_t n);

enum class FieldRoute { kGermain, kCyclotomic };

struct FourierField {
  Field field;
  FieldRoute route;
  std::string rationale;
};

// Field over which the p_len-point Fourier matrix has every square minor
// nonzero: Z_{2p+1} when p_len is a Germain prime (and q is unset or equal to
// the safe prime), otherwise GF(q^{p_len-1}) modulo x^{p_len-1} + ... + 1
// when q has order p_len - 1 modulo p_len.
FourierField fourier_field_for_length(std::uint32_t p_len,
                                      std::optional<std::uint32_t> q = std::nullopt);

// Smallest prime p >= n with 2p + 1 prime.
std::uint64_t germain_search(std::uint64_t n, std::uint64_t bound = 1000000);

namespace gfp {

// Dense polynomials over the prime field GF(p), little-endian, trimmed.
using Poly = std::vector<std::uint32_t>;

void trim(Poly& f);
Poly mulmod(const Poly& a, const Poly& b, const Poly& f, std::uint32_t p);
Poly mod(Poly a, const Poly& f, std::uint32_t p);
Poly gcd(Poly a, Poly b, std::uint32_t p);

// Ben-Or: f of degree m is irreducible iff gcd(x^{p^k} - x mod f, f) = 1
// for every 1 <= k <= m/2.
bool is_irreducible(const Poly& f, std::uint32_t p);

// Least monic irreducible of degree m (see make_field for the order).
Poly least_irreducible(std::uint32_t p, std::uint32_t m);

}  // namespace gfp

}  // namespace unitconv

#endif  // UNITCONV_FIELD_HPP_
