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

#include "unitconv/groupring.hpp"

#include <sstream>

namespace unitconv {

namespace {

std::size_t reduce(std::int64_t e, std::size_t n) {
  const auto m = static_cast<std::int64_t>(n);
  return static_cast<std::size_t>(((e % m) + m) % m);
}

}  // namespace

GroupSpec GroupSpec::cyclic(std::size_t n) {
  if (n == 0) throw Error(ErrorCode::kInvalidArgument, "cyclic group of order 0");
  GroupSpec g;
  g.kind_ = GroupKind::kCyclic;
  g.n_ = n;
  return g;
}

GroupSpec GroupSpec::product(std::size_t n, std::size_t m) {
  if (n == 0 || m == 0) throw Error(ErrorCode::kInvalidArgument, "cyclic factor of order 0");
  GroupSpec g;
  g.kind_ = GroupKind::kProduct;
  g.n_ = n;
  g.m_ = m;
  return g;
}

GroupSpec GroupSpec::dihedral(std::size_t n) {
  if (n == 0) throw Error(ErrorCode::kInvalidArgument, "dihedral group of order 0");
  GroupSpec g;
  g.kind_ = GroupKind::kDihedral;
  g.n_ = n;
  return g;
}

GroupSpec GroupSpec::parse(const std::string& name) {
  auto number = [&](const std::string& s) -> std::size_t {
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos) {
      throw Error(ErrorCode::kParse, "bad group name '" + name + "'");
    }
    return std::stoul(s);
  };
  if (name.size() >= 2 && name[0] == 'D') {
    const std::size_t order = number(name.substr(1));
    if (order % 2 != 0) throw Error(ErrorCode::kParse, "dihedral order must be even: '" + name + "'");
    return dihedral(order / 2);
  }
  if (name.size() >= 2 && name[0] == 'C') {
    const auto x = name.find("xC");
    if (x == std::string::npos) return cyclic(number(name.substr(1)));
    return product(number(name.substr(1, x - 1)), number(name.substr(x + 2)));
  }
  throw Error(ErrorCode::kParse, "bad group name '" + name + "'");
}

std::string GroupSpec::name() const {
  switch (kind_) {
    case GroupKind::kCyclic: return "C" + std::to_string(n_);
    case GroupKind::kProduct: return "C" + std::to_string(n_) + "xC" + std::to_string(m_);
    case GroupKind::kDihedral: return "D" + std::to_string(2 * n_);
  }
  return "";
}

std::size_t GroupSpec::element(std::int64_t first, std::int64_t second) const {
  switch (kind_) {
    case GroupKind::kCyclic: return reduce(first, n_);
    case GroupKind::kProduct: return reduce(second, m_) * n_ + reduce(first, n_);
    case GroupKind::kDihedral: return reduce(second, 2) * n_ + reduce(first, n_);
  }
  return 0;
}

std::pair<std::size_t, std::size_t> GroupSpec::exponents(std::size_t x) const {
  if (kind_ == GroupKind::kCyclic) return {x, 0};
  return {x % n_, x / n_};
}

std::size_t GroupSpec::mul(std::size_t x, std::size_t y) const {
  switch (kind_) {
    case GroupKind::kCyclic: return (x + y) % n_;
    case GroupKind::kProduct:
      return ((x / n_ + y / n_) % m_) * n_ + (x % n_ + y % n_) % n_;
    case GroupKind::kDihedral: {
      // (b^s a^i)(b^t a^j) = b^{s+t} a^{(-1)^t i + j}
      const std::size_t s = x / n_, i = x % n_, t = y / n_, j = y % n_;
      const std::size_t ii = t == 1 ? (n_ - i) % n_ : i;
      return ((s + t) % 2) * n_ + (ii + j) % n_;
    }
  }
  return 0;
}

std::size_t GroupSpec::inverse(std::size_t x) const {
  switch (kind_) {
    case GroupKind::kCyclic: return (n_ - x) % n_;
    case GroupKind::kProduct: return ((m_ - x / n_) % m_) * n_ + (n_ - x % n_) % n_;
    case GroupKind::kDihedral:
      // reflections are involutions
      return x >= n_ ? x : (n_ - x) % n_;
  }
  return 0;
}

GroupRingElement::GroupRingElement(Field field, GroupSpec group)
    : field_(std::move(field)), group_(group) {}

GroupRingElement GroupRingElement::one(const Field& field, const GroupSpec& group) {
  GroupRingElement e(field, group);
  e.add_term(0, 1);
  return e;
}

Elem GroupRingElement::coeff(std::size_t g) const {
  const auto it = terms_.find(g);
  return it == terms_.end() ? 0 : it->second;
}

void GroupRingElement::add_term(std::size_t g, Elem c) {
  if (g >= group_.order()) throw Error(ErrorCode::kIndexOutOfRange, "group element out of range");
  const Elem v = field_.add(coeff(g), c);
  if (v == 0) {
    terms_.erase(g);
  } else {
    terms_[g] = v;
  }
}

namespace {

void require_same(const GroupRingElement& a, const GroupRingElement& b) {
  if (!(a.group() == b.group()) || !(a.field() == b.field())) {
    throw Error(ErrorCode::kGroupMismatch, "group ring elements from different rings");
  }
}

}  // namespace

GroupRingElement gr_add(const GroupRingElement& a, const GroupRingElement& b) {
  require_same(a, b);
  GroupRingElement out = a;
  for (const auto& [g, c] : b.terms()) out.add_term(g, c);
  return out;
}

GroupRingElement gr_mul(const GroupRingElement& a, const GroupRingElement& b) {
  require_same(a, b);
  GroupRingElement out(a.field(), a.group());
  for (const auto& [g, x] : a.terms())
    for (const auto& [h, y] : b.terms()) out.add_term(a.group().mul(g, h), a.field().mul(x, y));
  return out;
}

GroupRingElement gr_transpose(const GroupRingElement& a) {
  GroupRingElement out(a.field(), a.group());
  for (const auto& [g, c] : a.terms()) out.add_term(a.group().inverse(g), c);
  return out;
}

Matrix to_matrix(const GroupRingElement& a) {
  const GroupSpec& grp = a.group();
  const std::size_t n = grp.order();
  Matrix m(a.field(), n, n);
  // (g, h) = coeff(g^{-1} h), i.e. h = g k for each term k.
  for (std::size_t g = 0; g < n; ++g)
    for (const auto& [k, c] : a.terms()) m(g, grp.mul(g, k)) = c;
  return m;
}

std::optional<GroupRingElement> gr_inverse(const GroupRingElement& a) {
  Matrix inv;
  try {
    inv = invert(to_matrix(a));
  } catch (const Error& e) {
    if (e.code() == ErrorCode::kSingular) return std::nullopt;
    throw;
  }
  // Row 0 of the matrix of b holds the coefficients of b.
  GroupRingElement b(a.field(), a.group());
  for (std::size_t h = 0; h < a.group().order(); ++h)
    if (inv(0, h) != 0) b.add_term(h, inv(0, h));
  if (!(gr_mul(a, b) == GroupRingElement::one(a.field(), a.group()))) {
    throw Error(ErrorCode::kVerificationFailed, "group ring inverse does not multiply to 1");
  }
  return b;
}

TannerReport tanner_diagnostics(const Matrix& m) {
  TannerReport rep;
  rep.row_weights.resize(m.rows());
  rep.column_weights.resize(m.cols());
  std::vector<std::vector<std::size_t>> rows_of(m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (m(i, j) != 0) {
        ++rep.row_weights[i];
        ++rep.column_weights[j];
        rows_of[j].push_back(i);
      }
  // A 4-cycle is a pair of rows met together by two different columns.
  std::vector<std::vector<bool>> seen;
  const bool dense_pairs = m.rows() <= 4096;
  if (dense_pairs) seen.assign(m.rows(), std::vector<bool>(m.rows(), false));
  std::map<std::pair<std::size_t, std::size_t>, bool> sparse_seen;
  for (std::size_t j = 0; j < m.cols() && !rep.has_4cycle; ++j) {
    const auto& rs = rows_of[j];
    for (std::size_t x = 0; x < rs.size() && !rep.has_4cycle; ++x)
      for (std::size_t y = x + 1; y < rs.size(); ++y) {
        bool hit;
        if (dense_pairs) {
          hit = seen[rs[x]][rs[y]];
          seen[rs[x]][rs[y]] = true;
        } else {
          hit = !sparse_seen.emplace(std::pair{rs[x], rs[y]}, true).second;
        }
        if (hit) {
          rep.has_4cycle = true;
          break;
        }
      }
  }
  return rep;
}

std::string write_group_ring_text(const GroupRingElement& a) {
  std::ostringstream os;
  const Field& f = a.field();
  os << "group=" << a.group().name() << " field=" << f.characteristic();
  if (f.degree() > 1) {
    os << "," << f.degree() << ",";
    for (std::size_t i = 0; i < f.modulus().size(); ++i) os << (i ? ":" : "") << f.modulus()[i];
  }
  os << '\n';
  for (const auto& [g, c] : a.terms()) {
    const auto [e1, e2] = a.group().exponents(g);
    if (f.degree() == 1) {
      os << c;
    } else {
      const auto cs = f.coeffs(c);
      for (std::size_t t = 0; t < cs.size(); ++t) os << (t ? ":" : "") << cs[t];
    }
    os << ' ' << e1;
    if (a.group().arity() == 2) os << ' ' << e2;
    os << '\n';
  }
  return os.str();
}

GroupRingElement read_group_ring_text(std::string_view text) {
  std::istringstream is{std::string(text)};
  std::string line;
  std::optional<GroupRingElement> out;
  std::size_t lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream ls(line);
    if (!out) {
      std::string gtok, ftok;
      ls >> gtok >> ftok;
      if (gtok.rfind("group=", 0) != 0 || ftok.rfind("field=", 0) != 0) {
        throw Error(ErrorCode::kParse, "group ring header must read 'group=<G> field=<p>[,m,c0:c1:...]'");
      }
      const GroupSpec grp = GroupSpec::parse(gtok.substr(6));
      std::stringstream fs(ftok.substr(6));
      std::string part;
      std::vector<std::string> parts;
      while (std::getline(fs, part, ',')) parts.push_back(part);
      try {
        const auto p = static_cast<std::uint32_t>(std::stoul(parts.at(0)));
        const std::uint32_t m = parts.size() > 1 ? static_cast<std::uint32_t>(std::stoul(parts[1])) : 1;
        std::optional<std::vector<std::uint32_t>> modulus;
        if (parts.size() > 2) {
          std::vector<std::uint32_t> mod;
          std::stringstream ms(parts[2]);
          std::string c;
          while (std::getline(ms, c, ':')) mod.push_back(static_cast<std::uint32_t>(std::stoul(c)));
          modulus = mod;
        }
        out = GroupRingElement(make_field(p, m, modulus), grp);
      } catch (const std::logic_error&) {
        throw Error(ErrorCode::kParse, "bad field in group ring header");
      }
      continue;
    }
    std::string ctok;
    std::int64_t e1 = 0, e2 = 0;
    if (!(ls >> ctok >> e1) || (out->group().arity() == 2 && !(ls >> e2))) {
      throw Error(ErrorCode::kParse, "bad term on line " + std::to_string(lineno));
    }
    const Field& f = out->field();
    Elem c = 0;
    try {
      if (f.degree() == 1) {
        c = f.from_int(std::stoll(ctok));
      } else {
        std::vector<std::uint32_t> cs;
        std::stringstream cs_in(ctok);
        std::string t;
        while (std::getline(cs_in, t, ':')) cs.push_back(static_cast<std::uint32_t>(std::stoul(t)));
        c = f.from_coeffs(cs);
      }
    } catch (const std::logic_error&) {
      throw Error(ErrorCode::kParse, "bad coefficient on line " + std::to_string(lineno));
    }
    out->add_term(out->group().element(e1, e2), c);
  }
  if (!out) throw Error(ErrorCode::kParse, "missing group ring header");
  return *out;
}

}  // namespace unitconv
