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

#include <algorithm>
#include <sstream>

namespace unitconv {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kNonPrimeCharacteristic: return "NonPrimeCharacteristic";
    case ErrorCode::kReducibleModulus: return "ReducibleModulus";
    case ErrorCode::kNoSuchRoot: return "NoSuchRoot";
    case ErrorCode::kNoValidField: return "NoValidField";
    case ErrorCode::kSearchLimitExceeded: return "SearchLimitExceeded";
    case ErrorCode::kSingular: return "Singular";
    case ErrorCode::kGuardExceeded: return "GuardExceeded";
    case ErrorCode::kDimensionMismatch: return "DimensionMismatch";
    case ErrorCode::kFieldMismatch: return "FieldMismatch";
    case ErrorCode::kConditionNotMet: return "ConditionNotMet";
    case ErrorCode::kCatastrophic: return "Catastrophic";
    case ErrorCode::kIndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::kInfeasibleRate: return "InfeasibleRate";
    case ErrorCode::kNoBlockPartition: return "NoBlockPartition";
    case ErrorCode::kGroupMismatch: return "GroupMismatch";
    case ErrorCode::kWrongRate: return "WrongRate";
    case ErrorCode::kNotOrthogonal: return "NotOrthogonal";
    case ErrorCode::kWrongCharacteristic: return "WrongCharacteristic";
    case ErrorCode::kNotUnit: return "NotUnit";
    case ErrorCode::kVerificationFailed: return "VerificationFailed";
    case ErrorCode::kParse: return "Parse";
  }
  return "Unknown";
}

namespace gfp {

void trim(Poly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

namespace {

std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) {
  // Fermat; p is prime and a != 0 mod p.
  std::uint64_t result = 1, base = a % p;
  std::uint64_t e = p - 2;
  while (e > 0) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return static_cast<std::uint32_t>(result);
}

Poly mul(const Poly& a, const Poly& b, std::uint32_t p) {
  if (a.empty() || b.empty()) return {};
  Poly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      out[i + j] = static_cast<std::uint32_t>(
          (out[i + j] + static_cast<std::uint64_t>(a[i]) * b[j]) % p);
    }
  }
  trim(out);
  return out;
}

}  // namespace

Poly mod(Poly a, const Poly& f, std::uint32_t p) {
  trim(a);
  const std::size_t df = f.size() - 1;
  const std::uint32_t lead_inv = inv_mod(f.back(), p);
  while (a.size() > df) {
    const std::size_t shift = a.size() - 1 - df;
    const std::uint64_t c = static_cast<std::uint64_t>(a.back()) * lead_inv % p;
    for (std::size_t i = 0; i <= df; ++i) {
      a[shift + i] = static_cast<std::uint32_t>(
          (a[shift + i] + (p - c) * f[i]) % p);
    }
    trim(a);
  }
  return a;
}

Poly mulmod(const Poly& a, const Poly& b, const Poly& f, std::uint32_t p) {
  return mod(mul(a, b, p), f, p);
}

Poly gcd(Poly a, Poly b, std::uint32_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    const std::uint32_t li = inv_mod(a.back(), p);
    for (auto& c : a) c = static_cast<std::uint32_t>(static_cast<std::uint64_t>(c) * li % p);
  }
  return a;
}

namespace {

Poly powmod(Poly base, std::uint64_t e, const Poly& f, std::uint32_t p) {
  Poly result{1};
  base = mod(std::move(base), f, p);
  while (e > 0) {
    if (e & 1) result = mulmod(result, base, f, p);
    base = mulmod(base, base, f, p);
    e >>= 1;
  }
  return result;
}

}  // namespace

bool is_irreducible(const Poly& f, std::uint32_t p) {
  Poly g = f;
  trim(g);
  if (g.size() < 2) return false;
  const std::size_t m = g.size() - 1;
  if (m == 1) return true;
  if (g[0] == 0) return false;
  Poly h{0, 1};  // x
  for (std::size_t k = 1; k <= m / 2; ++k) {
    h = powmod(h, p, g, p);
    Poly diff = h;
    if (diff.size() < 2) diff.resize(2, 0);
    diff[1] = (diff[1] + p - 1) % p;
    trim(diff);
    if (diff.empty()) return false;  // x^{p^k} = x mod f
    if (gcd(diff, g, p).size() > 1) return false;
  }
  return true;
}

Poly least_irreducible(std::uint32_t p, std::uint32_t m) {
  std::uint64_t count = 1;
  for (std::uint32_t i = 0; i < m; ++i) count *= p;
  for (std::uint64_t v = 0; v < count; ++v) {
    Poly f(m + 1, 0);
    std::uint64_t x = v;
    for (std::uint32_t i = 0; i < m; ++i) {
      f[i] = static_cast<std::uint32_t>(x % p);
      x /= p;
    }
    f[m] = 1;
    if (m > 1 && f[0] == 0) continue;
    if (is_irreducible(f, p)) return f;
  }
  throw Error(ErrorCode::kReducibleModulus, "no irreducible polynomial found");
}

}  // namespace gfp

namespace detail {

namespace {

std::vector<std::uint32_t> digits(Elem a, std::uint32_t p, std::uint32_t m) {
  std::vector<std::uint32_t> d(m, 0);
  for (std::uint32_t i = 0; i < m; ++i) {
    d[i] = a % p;
    a /= p;
  }
  return d;
}

Elem pack(const std::vector<std::uint32_t>& d, std::uint32_t p) {
  Elem v = 0;
  for (std::size_t i = d.size(); i-- > 0;) v = v * p + d[i];
  return v;
}

}  // namespace

Elem FieldData::slow_add(Elem a, Elem b) const {
  Elem out = 0, scale = 1;
  for (std::uint32_t i = 0; i < m; ++i) {
    const std::uint32_t s = (a % p + b % p) % p;
    out += s * scale;
    scale *= p;
    a /= p;
    b /= p;
  }
  return out;
}

Elem FieldData::slow_neg(Elem a) const {
  Elem out = 0, scale = 1;
  for (std::uint32_t i = 0; i < m; ++i) {
    const std::uint32_t c = a % p;
    out += ((p - c) % p) * scale;
    scale *= p;
    a /= p;
  }
  return out;
}

Elem FieldData::slow_mul(Elem a, Elem b) const {
  if (m == 1) return static_cast<Elem>(static_cast<std::uint64_t>(a) * b % p);
  return pack(gfp::mulmod(digits(a, p, m), digits(b, p, m), modulus, p), p);
}

}  // namespace detail

namespace {

constexpr std::uint64_t kTableLimit = 1u << 20;

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

Elem slow_pow(const detail::FieldData& d, Elem a, std::uint64_t e) {
  Elem result = 1;
  while (e > 0) {
    if (e & 1) result = d.slow_mul(result, a);
    a = d.slow_mul(a, a);
    e >>= 1;
  }
  return result;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

std::uint64_t multiplicative_order(std::uint64_t a, std::uint64_t n) {
  if (n < 2) throw Error(ErrorCode::kInvalidArgument, "modulus must be >= 2");
  a %= n;
  std::uint64_t x = a;
  for (std::uint64_t k = 1; k <= n; ++k) {
    if (x == 1) return k;
    x = static_cast<std::uint64_t>(static_cast<unsigned __int128>(x) * a % n);
  }
  throw Error(ErrorCode::kInvalidArgument, "element is not a unit modulo n");
}

Field make_field(std::uint32_t p, std::uint32_t m,
                 std::optional<std::vector<std::uint32_t>> modulus) {
  if (!is_prime(p)) {
    throw Error(ErrorCode::kNonPrimeCharacteristic,
                "characteristic " + std::to_string(p) + " is not prime");
  }
  if (m == 0) throw Error(ErrorCode::kInvalidArgument, "extension degree must be >= 1");
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < m; ++i) {
    q *= p;
    if (q > 0xffffffffull) {
      throw Error(ErrorCode::kInvalidArgument, "field cardinality exceeds 2^32");
    }
  }
  auto data = std::make_shared<detail::FieldData>();
  data->p = p;
  data->m = m;
  data->q = q;
  if (m > 1) {
    if (modulus) {
      auto f = *modulus;
      if (f.size() != m + 1 || f.back() != 1 ||
          std::any_of(f.begin(), f.end(), [p](std::uint32_t c) { return c >= p; })) {
        throw Error(ErrorCode::kInvalidArgument,
                    "modulus must be monic of degree " + std::to_string(m) +
                        " with coefficients in [0, p)");
      }
      if (!gfp::is_irreducible(f, p)) {
        throw Error(ErrorCode::kReducibleModulus, "modulus is reducible over GF(" +
                                                      std::to_string(p) + ")");
      }
      data->modulus = std::move(f);
    } else {
      data->modulus = gfp::least_irreducible(p, m);
    }
  }

  // Least primitive element by ascending search.
  const auto factors = prime_factors(q - 1);
  data->primitive = 0;
  for (Elem g = 1; g < q; ++g) {
    bool primitive = true;
    for (auto l : factors) {
      if (slow_pow(*data, g, (q - 1) / l) == 1) {
        primitive = false;
        break;
      }
    }
    if (primitive) {
      data->primitive = g;
      break;
    }
  }

  if (m > 1 && q <= kTableLimit) {
    const auto n = static_cast<std::uint32_t>(q - 1);
    data->exp_.resize(2 * static_cast<std::size_t>(n));
    data->log_.assign(q, 0);
    Elem x = 1;
    for (std::uint32_t i = 0; i < n; ++i) {
      data->exp_[i] = x;
      data->log_[x] = i;
      x = data->slow_mul(x, data->primitive);
    }
    for (std::uint32_t i = n; i < 2 * n; ++i) data->exp_[i] = data->exp_[i - n];
    if (p != 2) {
      data->zech_.resize(n);
      for (std::uint32_t dd = 0; dd < n; ++dd) {
        const Elem s = data->slow_add(1, data->exp_[dd]);
        data->zech_[dd] = s == 0 ? detail::FieldData::kNoLog : data->log_[s];
      }
    }
    data->tables = true;
  }

  Field field;
  field.data_ = std::move(data);
  return field;
}

Elem Field::inv(Elem a) const {
  if (a == 0) throw Error(ErrorCode::kInvalidArgument, "zero has no inverse");
  const auto& d = *data_;
  if (d.m == 1) {
    // Extended Euclid.
    std::int64_t t = 0, new_t = 1;
    std::int64_t r = d.p, new_r = a;
    while (new_r != 0) {
      const std::int64_t quot = r / new_r;
      std::int64_t tmp = t - quot * new_t;
      t = new_t;
      new_t = tmp;
      tmp = r - quot * new_r;
      r = new_r;
      new_r = tmp;
    }
    if (t < 0) t += d.p;
    return static_cast<Elem>(t);
  }
  if (d.tables) {
    return d.exp_[static_cast<std::uint32_t>(d.q - 1) - d.log_[a]];
  }
  return pow(a, d.q - 2);
}

Elem Field::pow(Elem a, std::uint64_t e) const {
  Elem result = 1;
  while (e > 0) {
    if (e & 1) result = mul(result, a);
    a = mul(a, a);
    e >>= 1;
  }
  return result;
}

Elem Field::from_int(std::int64_t v) const {
  const auto p = static_cast<std::int64_t>(data_->p);
  return static_cast<Elem>(((v % p) + p) % p);
}

std::vector<std::uint32_t> Field::coeffs(Elem a) const {
  return detail::digits(a, data_->p, data_->m);
}

Elem Field::from_coeffs(std::span<const std::uint32_t> c) const {
  if (c.size() != data_->m) {
    throw Error(ErrorCode::kInvalidArgument,
                "expected " + std::to_string(data_->m) + " coefficients");
  }
  Elem v = 0;
  for (std::size_t i = c.size(); i-- > 0;) {
    if (c[i] >= data_->p) {
      throw Error(ErrorCode::kInvalidArgument, "coefficient out of range");
    }
    v = v * data_->p + c[i];
  }
  return v;
}

std::string Field::name() const {
  std::ostringstream os;
  os << "GF(" << data_->p;
  if (data_->m > 1) os << "^" << data_->m;
  os << ")";
  return os.str();
}

bool operator==(const Field& a, const Field& b) {
  if (a.data_ == b.data_) return true;
  if (!a.data_ || !b.data_) return false;
  return a.data_->p == b.data_->p && a.data_->m == b.data_->m &&
         a.data_->modulus == b.data_->modulus;
}

Elem Field::mul_reference(Elem a, Elem b) const { return data_->slow_mul(a, b); }

Elem Field::add_reference(Elem a, Elem b) const {
  if (data_->m == 1) return static_cast<Elem>((a + b) % data_->p);
  return data_->slow_add(a, b);
}

FieldElement::FieldElement(Field field, Elem value)
    : field_(std::move(field)), value_(value) {
  if (!field_.contains(value_)) {
    throw Error(ErrorCode::kInvalidArgument, "element outside the field");
  }
}

namespace {

void require_same(const Field& a, const Field& b) {
  if (!(a == b)) throw Error(ErrorCode::kFieldMismatch, "elements of different fields");
}

}  // namespace

FieldElement FieldElement::operator+(const FieldElement& o) const {
  require_same(field_, o.field_);
  return {field_, field_.add(value_, o.value_)};
}
FieldElement FieldElement::operator-(const FieldElement& o) const {
  require_same(field_, o.field_);
  return {field_, field_.sub(value_, o.value_)};
}
FieldElement FieldElement::operator*(const FieldElement& o) const {
  require_same(field_, o.field_);
  return {field_, field_.mul(value_, o.value_)};
}
FieldElement FieldElement::operator/(const FieldElement& o) const {
  require_same(field_, o.field_);
  return {field_, field_.div(value_, o.value_)};
}
FieldElement FieldElement::operator-() const { return {field_, field_.neg(value_)}; }
FieldElement FieldElement::pow(std::uint64_t e) const { return {field_, field_.pow(value_, e)}; }
FieldElement FieldElement::inverse() const { return {field_, field_.inv(value_)}; }

FieldElement root_of_unity(const Field& field, std::uint64_t n) {
  const std::uint64_t order = field.cardinality() - 1;
  if (n == 0 || order % n != 0) {
    throw Error(ErrorCode::kNoSuchRoot, "no primitive " + std::to_string(n) +
                                            "-th root of unity in " + field.name());
  }
  return {field, field.pow(field.primitive_element(), order / n)};
}

FourierField fourier_field_for_length(std::uint32_t p_len, std::optional<std::uint32_t> q) {
  if (!is_prime(p_len)) {
    throw Error(ErrorCode::kInvalidArgument, std::to_string(p_len) + " is not prime");
  }
  if (q) {
    if (!is_prime(*q)) {
      throw Error(ErrorCode::kNonPrimeCharacteristic, std::to_string(*q) + " is not prime");
    }
    if (*q == p_len) {
      throw Error(ErrorCode::kInvalidArgument, "characteristic must differ from the length");
    }
  }
  const std::uint64_t safe = 2ull * p_len + 1;
  if (is_prime(safe) && (!q || *q == safe)) {
    return {make_field(static_cast<std::uint32_t>(safe)), FieldRoute::kGermain,
            std::to_string(p_len) + " is a Germain prime with safe prime " +
                std::to_string(safe)};
  }
  if (q && multiplicative_order(*q % p_len, p_len) == p_len - 1) {
    std::vector<std::uint32_t> phi(p_len, 1);
    auto field = make_field(*q, p_len - 1, phi);
    return {field, FieldRoute::kCyclotomic,
            "the order of " + std::to_string(*q) + " mod " + std::to_string(p_len) +
                " is " + std::to_string(p_len - 1)};
  }
  throw Error(ErrorCode::kNoValidField,
              "no Germain or cyclotomic field for length " + std::to_string(p_len));
}

std::uint64_t germain_search(std::uint64_t n, std::uint64_t bound) {
  for (std::uint64_t p = std::max<std::uint64_t>(n, 2); p <= bound; ++p) {
    if (is_prime(p) && is_prime(2 * p + 1)) return p;
  }
  throw Error(ErrorCode::kSearchLimitExceeded,
              "no Germain prime in [" + std::to_string(n) + ", " + std::to_string(bound) + "]");
}

}  // namespace unitconv
