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

#include "ucc/repro.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <iomanip>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

#include "unitconv/design.hpp"
#include "unitconv/distance.hpp"
#include "unitconv/duality.hpp"
#include "unitconv/groupring.hpp"
#include "unitconv/polymat.hpp"

namespace ucc {

using namespace unitconv;

namespace {

// Collects failed expectations; the first few are reported.
class Tally {
 public:
  void expect(bool ok, const std::string& what) {
    ++checks_;
    if (!ok) failures_.push_back(what);
  }
  void note(const std::string& s) { notes_.push_back(s); }
  bool ok() const { return failures_.empty(); }
  std::string detail() const {
    std::ostringstream out;
    if (!failures_.empty()) {
      out << failures_.size() << "/" << checks_ << " checks failed: ";
      for (std::size_t i = 0; i < failures_.size() && i < 4; ++i) out << (i ? "; " : "") << failures_[i];
      if (failures_.size() > 4) out << "; ...";
    } else {
      out << checks_ << " checks passed";
    }
    for (const auto& n : notes_) out << "; " << n;
    return out.str();
  }

 private:
  std::size_t checks_ = 0;
  std::vector<std::string> failures_;
  std::vector<std::string> notes_;
};

std::string list(const std::vector<std::size_t>& v) {
  std::string s = "{";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + "}";
}

SelectionScheme full_row(std::size_t n) {
  std::vector<std::vector<std::size_t>> t;
  for (std::size_t i = 0; i < n; ++i) t.push_back({i});
  return SelectionScheme(t);
}

SelectionScheme consecutive(std::size_t r, std::size_t count, std::size_t step) {
  std::vector<std::vector<std::size_t>> t(count);
  for (std::size_t i = 0; i < count; ++i)
    for (std::size_t k = 0; k < r; ++k) t[i].push_back(i * step + k);
  return SelectionScheme(t);
}

const Field& gf(std::uint32_t p, std::uint32_t m = 1) {
  static std::map<std::pair<std::uint32_t, std::uint32_t>, Field> cache;
  auto it = cache.find({p, m});
  if (it == cache.end()) it = cache.emplace(std::pair{p, m}, make_field(p, m)).first;
  return it->second;
}

const UnitScheme& f3() {
  static const UnitScheme u = UnitScheme::fourier(gf(7), 3);
  return u;
}
const UnitScheme& f5() {
  static const UnitScheme u = UnitScheme::fourier(gf(11), 5);
  return u;
}
const UnitScheme& f7() {
  static const UnitScheme u = UnitScheme::fourier(fourier_field_for_length(7, 3).field, 7);
  return u;
}
const UnitScheme& f11() {
  static const UnitScheme u = UnitScheme::fourier(gf(23), 11);
  return u;
}

Matrix cyclic_matrix(std::size_t n, std::initializer_list<std::int64_t> exps) {
  const GroupSpec g = GroupSpec::cyclic(n);
  GroupRingElement e(gf(2), g);
  for (auto x : exps) e.add_term(g.element(x), 1);
  return to_matrix(e);
}

Matrix c4_matrix() { return cyclic_matrix(4, {1, 2, 3}); }
Matrix c8_matrix() { return cyclic_matrix(8, {0, 2, 6}); }
Matrix fc16_matrix() { return cyclic_matrix(16, {1, 7, 8, 9, 15}); }

// 1 + b + ba in Z_2 D_8.
Matrix d8_matrix() {
  const GroupSpec d8 = GroupSpec::dihedral(4);
  GroupRingElement u(gf(2), d8);
  for (auto [i, s] : {std::pair{0, 0}, std::pair{0, 1}, std::pair{1, 1}}) u.add_term(d8.element(i, s), 1);
  return to_matrix(u);
}

Matrix row_range(const Matrix& m, std::size_t from, std::size_t count) {
  std::vector<std::size_t> idx(count);
  std::iota(idx.begin(), idx.end(), from);
  return m.select_rows(idx);
}

ConvCode d8_code() {
  const Matrix U = d8_matrix();
  return ConvCode::from_generator(PolyMatrix::from_blocks({row_range(U, 0, 4), row_range(U, 4, 4)}));
}

// v in Z_2(C_204 x C_4).
GroupRingElement ldpc_element() {
  const GroupSpec g = GroupSpec::parse("C204xC4");
  GroupRingElement v(gf(2), g);
  v.add_term(g.element(204 - 75, 0), 1);
  for (int e : {13, 111, 168}) v.add_term(g.element(204 - e, 1), 1);
  for (int e : {29, 34, 170}) v.add_term(g.element(204 - e, 2), 1);
  for (int e : {27, 180}) v.add_term(g.element(204 - e, 3), 1);
  return v;
}

// ---------------------------------------------------------------------------

CriterionResult fourier_reproduction(const ReproOptions&) {
  Tally t;
  const Matrix displayed = Matrix::from_ints(
      gf(11), {{1, 1, 1, 1, 1}, {1, 4, 5, 9, 3}, {1, 5, 3, 4, 9}, {1, 9, 4, 3, 5}, {1, 3, 9, 5, 4}});
  t.expect(fourier_matrix(gf(11), 5).U == displayed, "F_5 over GF(11) differs from the displayed matrix");

  const Matrix f11 = fourier_matrix(gf(23), 11).U;
  const std::vector<Elem> row1{1, 2, 4, 8, 16, 9, 18, 13, 3, 6, 12};
  t.expect(std::equal(row1.begin(), row1.end(), f11.row(1).begin()), "F_11 over GF(23) row 1 differs");

  const std::vector<std::tuple<std::uint32_t, std::uint32_t, std::size_t>> pairs{
      {7, 1, 3}, {11, 1, 5}, {2, 4, 5}, {3, 4, 5}, {3, 6, 7}, {5, 6, 7}, {23, 1, 11}, {2, 12, 13}, {227, 1, 113}};
  for (auto [p, m, n] : pairs) {
    const Field& f = gf(p, m);
    const FourierPair fp = fourier_matrix(f, n);
    t.expect((fp.U * fp.V).is_identity(), "F V != I for F_" + std::to_string(n) + " over " + f.name());
  }
  t.note(std::to_string(pairs.size()) + " Fourier pairs checked");
  return {{}, t.ok(), t.detail(), 0};
}

CriterionResult chebotarev(const ReproOptions& opts) {
  Tally t;
  const std::vector<std::tuple<std::uint32_t, std::uint32_t, std::size_t>> cases{
      {7, 1, 3}, {11, 1, 5}, {2, 4, 5}, {23, 1, 11}};
  for (auto [p, m, n] : cases) {
    const Field& f = gf(p, m);
    const ChebotarevResult r = chebotarev_check(fourier_matrix(f, n).U, 13, opts.jobs);
    const std::string name = "F_" + std::to_string(n) + "/" + f.name();
    std::string what = name + " has a singular minor";
    if (!r.holds) what += " at rows " + list(r.failing_rows) + " cols " + list(r.failing_cols);
    t.expect(r.holds, what);
    if (r.holds) t.note(name + " holds (" + std::to_string(r.determinants) + " determinants)");
  }
  return {{}, t.ok(), t.detail(), 0};
}

CriterionResult mds_subsets(const ReproOptions& opts) {
  Tally t;
  const Matrix& U = f11().U();
  std::mt19937_64 rng(opts.seed);
  std::vector<std::size_t> all(11);
  std::iota(all.begin(), all.end(), 0);
  for (std::size_t r = 1; r <= 5; ++r) {
    for (int k = 0; k < 20; ++k) {
      std::vector<std::size_t> rows;
      std::sample(all.begin(), all.end(), std::back_inserter(rows), r, rng);
      const auto d = linear_min_distance(U.select_rows(rows), 10'000'000, opts.jobs);
      t.expect(d == 12 - r, "rows " + list(rows) + " give distance " + std::to_string(d) + " != " +
                                std::to_string(12 - r));
    }
  }
  return {{}, t.ok(), t.detail(), 0};
}

void expect_exact(Tally& t, const std::string& label, const ConvCode& code, std::uint64_t want) {
  try {
    const DistanceReport d = free_distance_exact(code);
    t.expect(d.exact && d.upper == want,
             label + " d_free = " + std::to_string(d.upper) + ", expected " + std::to_string(want));
    t.note(label + " " + std::to_string(d.upper));
  } catch (const Error& e) {
    t.expect(false, label + ": " + e.what());
  }
}

CriterionResult exact_distances(const ReproOptions&) {
  Tally t;
  expect_exact(t, "(3,1,2;2)/GF(7)", build_generator(f3(), full_row(3)), 9);
  expect_exact(t, "(5,1,4;4)/GF(11)", build_generator(f5(), full_row(5)), 25);
  expect_exact(t, "(5,2,2;1)/GF(11)", build_generator(f5(), SelectionScheme({{0, 1}, {2, 3}})), 8);

  const ConvCode c11 = build_generator(f11(), full_row(11));
  SearchLimits lim;
  lim.max_degree = 3;
  lim.max_support = 4;
  const SearchResult s = bounded_search(c11.G, lim);
  const std::uint64_t at_one = codeword_weight(c11.G, {{1}});
  t.expect(s.complete && s.weight >= 121, "(11,1,10;10) degree <= 3 minimum " + std::to_string(s.weight));
  t.expect(at_one == 121, "(11,1,10;10) weight at f = 1 is " + std::to_string(at_one));
  t.note("(11,1,10;10) degree<=3 min " + std::to_string(s.weight));

  expect_exact(t, "(4,2,2;1)/Z2C4", build_self_dual(c4_matrix(), 2), 4);
  expect_exact(t, "(8,4,4;1)/Z2D8", d8_code(), 6);
  expect_exact(t, "(8,6,6;1)/Z2C8", build_dual_containing(c8_matrix(), 4), 4);
  return {{}, t.ok(), t.detail(), 0};
}

CriterionResult squeeze(const ReproOptions& opts) {
  Tally t;
  const ConvCode code = build_generator(f11(), consecutive(5, 2, 5));
  DistanceOptions d;
  d.jobs = opts.jobs;
  const DistanceReport b = free_distance_bounds(code, &f11(), d);
  t.expect(b.lower == 14, "lower bound " + std::to_string(b.lower) + " != 14");
  t.expect(b.upper == 14 && !b.witness.empty() && codeword_weight(code.G, b.witness) == 14,
           "no weight-14 witness (upper " + std::to_string(b.upper) + ")");
  t.expect(b.exact, "not exact");
  d.search_depth = 4;
  const SupportProfile p = support_profile(code, 2, &f11(), d);
  t.expect(p.lower >= 16, "support >= 2 lower bound " + std::to_string(p.lower) + " < 16");
  t.expect(p.upper >= 16, "support >= 2 search found weight " + std::to_string(p.upper) + " < 16");
  t.note("d_free " + std::to_string(b.lower) + ".." + std::to_string(b.upper) + "; support>=2: lower " +
         std::to_string(p.lower) + " (" + p.lower_provenance + "), best witness " + std::to_string(p.upper));
  return {{}, t.ok(), t.detail(), 0};
}

CriterionResult gsb_table(const ReproOptions&) {
  Tally t;
  const std::vector<std::array<std::uint64_t, 4>> rows{
      {5, 2, 2, 9},  {5, 2, 4, 14}, {5, 3, 3, 8},   {7, 3, 3, 12},  {7, 2, 4, 20},  {7, 2, 6, 27},
      {11, 5, 5, 18}, {11, 4, 4, 19}, {11, 3, 6, 31}, {11, 4, 8, 30}, {11, 5, 10, 29}, {11, 2, 8, 54}};
  for (const auto& [n, r, d, want] : rows) {
    const auto g = gsb(n, r, d);
    t.expect(g == want, "gsb(" + std::to_string(n) + "," + std::to_string(r) + "," + std::to_string(d) +
                            ") = " + std::to_string(g) + " != " + std::to_string(want));
  }
  for (std::uint64_t n = 2; n <= 128; ++n) {
    t.expect(gsb(n, 1, n - 1) == n * n, "gsb(" + std::to_string(n) + ",1," + std::to_string(n - 1) + ") != n^2");
  }
  return {{}, t.ok(), t.detail(), 0};
}

struct NamedScheme {
  std::string label;
  UnitScheme unit;
  SelectionScheme scheme;
};

std::vector<NamedScheme> certificate_schemes() {
  std::vector<NamedScheme> out;
  out.push_back({"(3,1,2;2)", f3(), full_row(3)});
  out.push_back({"(5,1,4;4)", f5(), full_row(5)});
  out.push_back({"(5,2,2;1)", f5(), SelectionScheme({{0, 1}, {2, 3}})});
  out.push_back({"(11,1,10;10)", f11(), full_row(11)});
  const UnitScheme c4 = UnitScheme::from_orthogonal(c4_matrix(), "Z2C4").with_blocks(2);
  out.push_back({"(4,2,2;1)/Z2C4", c4, block_scheme(c4, {{0}, {1}})});
  const UnitScheme d8 = UnitScheme::from_matrix(d8_matrix(), "Z2D8").with_blocks(4);
  out.push_back({"(8,4,4;1)/Z2D8", d8, block_scheme(d8, {{0}, {1}})});
  const UnitScheme c8 = UnitScheme::from_orthogonal(c8_matrix(), "Z2C8").with_blocks(2);
  out.push_back({"(8,6,6;1)/Z2C8", c8, block_scheme(c8, {{0, 1, 2}, {1, 2, 3}})});
  out.push_back({"(11,5,5;1)", f11(), consecutive(5, 2, 5)});
  out.push_back({"(5,2,4;2)", f5(), auto_design(f5(), 2, 2)});
  out.push_back({"(5,3,3;1)", f5(), auto_design(f5(), 3, 1)});
  out.push_back({"(7,3,3;1)", f7(), consecutive(3, 2, 3)});
  out.push_back({"(7,2,4;2)", f7(), consecutive(2, 3, 1)});
  out.push_back({"(7,2,6;3)", f7(), SelectionScheme({{0, 1}, {2, 3}, {4, 5}, {5, 6}})});
  out.push_back({"(11,4,4;1)", f11(), auto_design(f11(), 4, 1)});
  out.push_back({"(11,3,6;2)", f11(), consecutive(3, 3, 3)});
  out.push_back({"(11,4,8;2)", f11(), auto_design(f11(), 4, 2)});
  out.push_back({"(11,5,10;2)", f11(), auto_design(f11(), 5, 2)});
  out.push_back({"(11,2,8;4)", f11(), consecutive(2, 5, 1)});
  out.push_back({"7x7 (7,2,4;2)", f7(), consecutive(2, 3, 2)});
  return out;
}

CriterionResult certificates(const ReproOptions&) {
  Tally t;
  std::size_t count = 0;
  for (const auto& [label, unit, scheme] : certificate_schemes()) {
    ++count;
    try {
      const ConvCode code = build_generator(unit, scheme);
      const PolyMatrix& g = code.G;
      std::string method;
      const PolyMatrix h = right_inverse_structured(scheme, unit, &method);
      t.expect(g * h == PolyMatrix::identity(unit.field(), code.r), label + ": G H != I");
      t.expect(right_invertible_general(g).has_value(), label + ": general method finds no right inverse");
      const PolyMatrix k = check_matrix(scheme, unit);
      t.expect((g * k).is_zero(), label + ": G K != 0");
      t.expect(rank(k.block(0)) == code.n - code.r, label + ": K(0) not of full column rank");
    } catch (const Error& e) {
      t.expect(false, label + ": " + e.what());
    }
  }
  t.note(std::to_string(count) + " schemes");
  return {{}, t.ok(), t.detail(), 0};
}

// Smallest-first search for a codeword of the given weight among binary
// inputs of degree <= 1 with at most three nonzero input bits.
std::optional<InputSequence> weight_witness(const PolyMatrix& g, std::uint64_t want) {
  const std::size_t r = g.rows();
  const std::size_t slots = 2 * r;
  for (std::size_t k = 1; k <= 3; ++k) {
    std::vector<bool> pick(slots, false);
    std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(std::min(k, slots)), true);
    do {
      InputSequence u(2, std::vector<Elem>(r, 0));
      for (std::size_t s = 0; s < slots; ++s)
        if (pick[s]) u[s / r][s % r] = 1;
      if (codeword_weight(g, u) == want) return u;
    } while (std::prev_permutation(pick.begin(), pick.end()));
  }
  return std::nullopt;
}

CriterionResult duality(const ReproOptions&) {
  Tally t;
  try {
    const ConvCode c4 = build_self_dual(c4_matrix(), 2);
    t.expect(c4.duality && is_self_dual(c4).has_value(), "Z2C4 not certified self-dual");
    t.expect(is_self_dual(d8_code()).has_value(), "Z2D8 not certified self-dual");

    const auto contain = [&](const std::string& label, const ConvCode& code) {
      const bool certified = code.duality && code.duality->kind == DualityKind::kDualContaining &&
                             is_dual_containing(code, code.duality->check, *code.right_inverse).has_value();
      t.expect(certified, label + " not certified dual-containing");
      const auto w = weight_witness(code.G, 4);
      t.expect(w.has_value(), label + ": no weight-4 witness found");
      const DistanceReport d = free_distance_exact(code);
      t.note(label + " weight-4 witness " + (w ? "found" : "missing") + ", exact d_free " + std::to_string(d.upper));
    };
    contain("(8,6,6;1)/Z2C8", build_dual_containing(c8_matrix(), 4));
    contain("(16,14,14;1)/FC16", build_dual_containing(fc16_matrix(), 8, 1));

    std::vector<std::size_t> order{0, 1, 2, 3};
    int certified = 0;
    do {
      const ConvCode code = build_self_dual(c8_matrix(), 4, order);
      if (code.duality && is_self_dual(code)) ++certified;
    } while (std::next_permutation(order.begin(), order.end()));
    t.expect(certified == 24, std::to_string(certified) + "/24 block orders certified self-dual");
  } catch (const Error& e) {
    t.expect(false, e.what());
  }
  return {{}, t.ok(), t.detail(), 0};
}

CriterionResult ldpc(const ReproOptions&) {
  Tally t;
  try {
    const GroupRingElement v = ldpc_element();
    t.expect(v.support() == 9, "support " + std::to_string(v.support()));
    const Matrix V = to_matrix(v);
    const TannerReport tr = tanner_diagnostics(V);
    const bool weight9 = std::all_of(tr.column_weights.begin(), tr.column_weights.end(),
                                     [](std::size_t w) { return w == 9; });
    t.expect(weight9, "column weights are not all 9");
    t.expect(!tr.has_4cycle, "Tanner graph of V has a 4-cycle");
    const auto u = gr_inverse(v);
    t.expect(u.has_value(), "v is not a unit");
    if (!u) return {{}, false, t.detail(), 0};
    const Matrix U = to_matrix(*u);
    for (std::size_t i = 0; i < 4; ++i) {
      const Matrix Ai = row_range(U, 204 * i, 204);
      for (std::size_t j = 0; j < 4; ++j) {
        std::vector<std::size_t> cols(204);
        std::iota(cols.begin(), cols.end(), 204 * j);
        const Matrix prod = Ai * V.select_cols(cols);
        t.expect(i == j ? prod.is_identity() : prod.is_zero(),
                 "A_" + std::to_string(i) + " B_" + std::to_string(j) + " wrong");
      }
    }
    const UnitScheme unit = UnitScheme::from_inverse(U, V, "Z2(C204xC4)").with_blocks(204);
    const SelectionScheme s = block_scheme(unit, {{0}, {1}, {2}, {3}});
    const ConvCode code = build_generator(unit, s);
    t.expect(code.parameters() == "(816,204,612;3)", "parameters " + code.parameters());
    std::string method;
    const PolyMatrix h = right_inverse_structured(s, unit, &method);
    t.expect(code.G * h == PolyMatrix::identity(unit.field(), 204), "structured right inverse fails");
    t.note("u support " + std::to_string(u->support()) + ", right inverse by " + method);
  } catch (const Error& e) {
    t.expect(false, e.what());
  }
  return {{}, t.ok(), t.detail(), 0};
}

// Minimum codeword weight over inputs u_0 + ... + u_D z^D with u_0 != 0, by
// direct convolution.
std::uint64_t brute_force_distance(const PolyMatrix& g, std::size_t D) {
  const Field& f = g.field();
  const std::size_t r = g.rows(), n = g.cols();
  const std::size_t mu = static_cast<std::size_t>(g.degree());
  const auto q = f.cardinality();
  std::uint64_t blocks = 1;
  for (std::size_t i = 0; i < r; ++i) blocks *= q;
  std::vector<std::vector<Elem>> inputs(blocks, std::vector<Elem>(r));
  for (std::uint64_t x = 0; x < blocks; ++x) {
    std::uint64_t y = x;
    for (std::size_t i = 0; i < r; ++i, y /= q) inputs[x][i] = static_cast<Elem>(y % q);
  }
  std::vector<std::uint64_t> chosen(D + 1, 0);
  std::uint64_t best = std::numeric_limits<std::uint64_t>::max();
  auto block_weight = [&](std::size_t t) {
    std::uint64_t w = 0;
    for (std::size_t j = 0; j < n; ++j) {
      Elem acc = 0;
      for (std::size_t i = 0; i <= mu && i <= t; ++i) {
        if (t - i > D) continue;
        const auto& u = inputs[chosen[t - i]];
        const Matrix& gi = g.block(i);
        for (std::size_t k = 0; k < r; ++k) acc = f.add(acc, f.mul(u[k], gi(k, j)));
      }
      w += acc != 0;
    }
    return w;
  };
  auto rec = [&](auto&& self, std::size_t t, std::uint64_t w) -> void {
    if (w >= best) return;
    if (t > D) {
      for (std::size_t s = D + 1; s <= D + mu; ++s) w += block_weight(s);
      best = std::min(best, w);
      return;
    }
    for (std::uint64_t x = (t == 0 ? 1 : 0); x < blocks; ++x) {
      chosen[t] = x;
      self(self, t + 1, w + block_weight(t));
    }
    chosen[t] = 0;
  };
  rec(rec, 0, 0);
  return best;
}

std::uint64_t ipow(std::uint64_t b, std::uint64_t e) {
  std::uint64_t r = 1;
  while (e--) r *= b;
  return r;
}

CriterionResult properties(const ReproOptions& opts) {
  Tally t;
  std::mt19937_64 rng(opts.seed);
  const std::array<std::uint32_t, 4> qs{2, 3, 5, 7};
  std::size_t oracle = 0;
  std::map<std::string, std::size_t> failures;
  std::map<std::string, std::string> first;
  auto fail = [&](const std::string& kind, const std::string& what) {
    if (failures[kind]++ == 0) first[kind] = what;
  };
  for (int sample = 0; sample < 200; ++sample) {
    std::uint32_t q;
    std::size_t n, r, mu;
    do {
      q = qs[rng() % qs.size()];
      n = 2 + rng() % 5;
      r = 1 + rng() % (n - 1);
      mu = 1 + rng() % 3;
    } while (ipow(q, r * mu) > 4096);
    const Field& f = gf(q);
    Matrix U(f, n, n);
    do {
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) U(i, j) = static_cast<Elem>(rng() % q);
    } while (rank(U) < n);
    std::vector<std::size_t> idx(n);
    std::iota(idx.begin(), idx.end(), 0);
    SelectionScheme scheme;
    do {
      std::vector<std::vector<std::size_t>> tuples;
      for (std::size_t i = 0; i <= mu; ++i) {
        std::shuffle(idx.begin(), idx.end(), rng);
        tuples.emplace_back(idx.begin(), idx.begin() + static_cast<std::ptrdiff_t>(r));
      }
      scheme = SelectionScheme(tuples);
    } while (classify_selection(scheme) == SelectionClass::kUnknown);

    std::ostringstream label;
    label << "sample " << sample << " GF(" << q << ") n=" << n << " scheme " << scheme.to_string();
    try {
      const UnitScheme unit = UnitScheme::from_matrix(U, "random");
      const ConvCode code = build_generator(unit, scheme);
      std::string step = "right inverse";
      try {
        const PolyMatrix h = right_inverse_structured(scheme, unit);
        if (!(code.G * h == PolyMatrix::identity(f, r))) fail("G H != I", label.str());
        step = "check matrix";
        PolyMatrix k;
        try {
          k = check_matrix(scheme, unit);
        } catch (const Error& e) {
          if (e.code() != ErrorCode::kConditionNotMet) throw;
          k = polynomial_kernel(code.G);
        }
        if (!(code.G * k).is_zero() || k.cols() != n - r) fail("G K != 0", label.str());
        step = "distance";
        const DistanceReport exact = free_distance_exact(code);
        const DistanceReport bounds = free_distance_bounds(code, &unit);
        const std::uint64_t top = gsb(n, r, code.delta);
        if (exact.upper < bounds.lower || exact.upper > top) {
          fail("distance outside [lower, GSB]", label.str() + " d=" + std::to_string(exact.upper));
        }
        if (ipow(q, r * (2 * mu + 3)) <= 1'000'000) {
          ++oracle;
          const std::uint64_t brute = brute_force_distance(code.G, 2 * mu + 2);
          if (brute != exact.upper) {
            fail("trellis != oracle", label.str() + " trellis " + std::to_string(exact.upper) + " oracle " +
                                          std::to_string(brute));
          }
        }
      } catch (const Error& e) {
        fail(step + ": " + std::string(error_code_name(e.code())), label.str() + ": " + e.what());
      }
    } catch (const Error& e) {
      fail("setup", label.str() + ": " + e.what());
    }
  }
  for (const auto& [kind, count] : failures) {
    t.expect(false, kind + " x" + std::to_string(count) + " (first: " + first[kind] + ")");
  }
  t.note("200 samples, " + std::to_string(oracle) + " oracle-checked");
  return {{}, t.ok(), t.detail(), 0};
}

using Runner = CriterionResult (*)(const ReproOptions&);

struct Entry {
  Criterion c;
  Runner run;
};

const std::vector<Entry>& registry() {
  static const std::vector<Entry> r{
      {{1, "fourier", "Fourier matrices reproduce the displayed values; F V = I", "exact"}, fourier_reproduction},
      {{2, "chebotarev", "Chebotarev property for F_3/GF(7), F_5/GF(11), F_5/GF(2^4), F_11/GF(23)", "exact"},
       chebotarev},
      {{3, "mds", "20 random r-row subsets of F_11/GF(23) per r <= 5 have distance 12 - r", "exact"}, mds_subsets},
      {{4, "distance", "exact free distances", "exact"}, exact_distances},
      {{5, "distance", "(11,5,5;1) squeeze to 14; support >= 2 bound 16", "exact"}, squeeze},
      {{6, "gsb", "generalized Singleton bound table", "exact"}, gsb_table},
      {{7, "certificates", "structured right inverses and check matrices", "exact"}, certificates},
      {{8, "duality", "self-dual and dual-containing certificates", "exact"}, duality},
      {{9, "ldpc", "(816,204,612;3) LDPC code from v in Z_2(C_204 x C_4)", "exact"}, ldpc},
      {{10, "property", "200 random unit schemes: G H = I, G K = 0, bounds, trellis = oracle", "exact"},
       properties},
  };
  return r;
}

}  // namespace

const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> c = [] {
    std::vector<Criterion> out;
    for (const auto& e : registry()) out.push_back(e.c);
    return out;
  }();
  return c;
}

std::vector<Criterion> select_criteria(const std::string& only) {
  if (only.empty()) return criteria();
  std::set<std::string> keys;
  std::stringstream ss(only);
  for (std::string k; std::getline(ss, k, ',');)
    if (!k.empty()) keys.insert(k);
  std::vector<Criterion> out;
  for (const auto& c : criteria()) {
    if (keys.count(c.group) || keys.count(std::to_string(c.id))) out.push_back(c);
  }
  if (out.empty()) throw Error(ErrorCode::kInvalidArgument, "no criterion matches '" + only + "'");
  return out;
}

CriterionResult run_criterion(const Criterion& c, const ReproOptions& opts) {
  const auto start = std::chrono::steady_clock::now();
  CriterionResult res;
  for (const auto& e : registry()) {
    if (e.c.id != c.id) continue;
    try {
      res = e.run(opts);
    } catch (const std::exception& ex) {
      res.pass = false;
      res.detail = std::string("exception: ") + ex.what();
    }
  }
  res.criterion = c;
  res.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return res;
}

std::vector<CriterionResult> run_repro(const ReproOptions& opts,
                                       const std::function<void(const CriterionResult&)>& on_result) {
  std::vector<CriterionResult> out;
  for (const auto& c : select_criteria(opts.only)) {
    out.push_back(run_criterion(c, opts));
    if (on_result) on_result(out.back());
  }
  return out;
}

std::string format_result(const CriterionResult& r) {
  std::ostringstream out;
  out << "criterion " << r.criterion.id << " [" << r.criterion.group << "] " << (r.pass ? "PASS" : "FAIL") << " ("
      << std::fixed << std::setprecision(2) << r.seconds << " s, tolerance: " << r.criterion.tolerance
      << "): " << r.criterion.title << " -- " << r.detail;
  return out.str();
}

nlohmann::json result_to_json(const CriterionResult& r) {
  return {{"id", r.criterion.id},     {"group", r.criterion.group},
          {"title", r.criterion.title}, {"tolerance", r.criterion.tolerance},
          {"pass", r.pass},           {"detail", r.detail},
          {"seconds", r.seconds}};
}

}  // namespace ucc
