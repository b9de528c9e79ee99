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

#include <algorithm>
#include <bit>
#include <optional>
#include <unordered_map>
#include <utility>
#include <vector>

#include "unitconv/design.hpp"
#include "unitconv/error.hpp"
#include "unitconv/matrix.hpp"

namespace unitconv {
namespace {

constexpr std::uint64_t kSat = std::numeric_limits<std::uint64_t>::max();

std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
  if (a == 0 || b == 0) return 0;
  return a > kSat / b ? kSat : a * b;
}

std::uint64_t sat_pow(std::uint64_t base, std::size_t e) {
  std::uint64_t v = 1;
  for (std::size_t i = 0; i < e; ++i) v = sat_mul(v, base);
  return v;
}

std::uint64_t binom(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t v = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    const std::uint64_t num = n - k + i;
    if (v > kSat / num) return kSat;
    v = v * num / i;
  }
  return v;
}

void decode_input(std::uint64_t index, std::uint64_t q, std::vector<Elem>& out) {
  for (auto& x : out) {
    x = static_cast<Elem>(index % q);
    index /= q;
  }
}

// idx-th nonzero vector whose leading nonzero coordinate is 1, for idx <
// (q^len - 1) / (q - 1).
void decode_normalized(std::uint64_t idx, std::uint64_t q, std::vector<Elem>& out) {
  std::fill(out.begin(), out.end(), 0);
  const std::size_t len = out.size();
  for (std::size_t lead = 0; lead < len; ++lead) {
    const std::uint64_t block = sat_pow(q, len - 1 - lead);
    if (idx < block) {
      out[lead] = 1;
      for (std::size_t t = lead + 1; t < len; ++t) {
        out[t] = static_cast<Elem>(idx % q);
        idx /= q;
      }
      return;
    }
    idx -= block;
  }
}

void trim_trailing(InputSequence& u) {
  while (!u.empty() &&
         std::all_of(u.back().begin(), u.back().end(), [](Elem x) { return x == 0; })) {
    u.pop_back();
  }
}

// a E for every input index a < count, flattened row-major.
std::vector<Elem> product_table(const Matrix& e, std::uint64_t count) {
  const Field& f = e.field();
  const std::uint64_t q = f.cardinality();
  const std::size_t n = e.cols();
  std::vector<Elem> t(count * n, 0);
  for (std::uint64_t a = 1; a < count; ++a) {
    std::uint64_t pw = 1;
    std::size_t k = 0;
    while ((a / pw) % q == 0) {
      pw *= q;
      ++k;
    }
    const auto d = static_cast<Elem>((a / pw) % q);
    const std::uint64_t base = a - d * pw;
    for (std::size_t j = 0; j < n; ++j) t[a * n + j] = f.add(t[base * n + j], f.mul(d, e(k, j)));
  }
  return t;
}

std::uint64_t mix(std::uint64_t h, std::uint64_t v) {
  h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}

// Edge weights packed as bit masks; q = 2 and n <= 64.
class BinaryKernel {
 public:
  using Acc = std::uint64_t;

  BinaryKernel(const PolyMatrix& g, std::size_t mu, std::uint64_t inputs, bool injective)
      : mu_(mu), inputs_(inputs), injective_(injective), table_(mu + 1) {
    for (std::size_t i = 0; i <= mu; ++i) {
      const Matrix e = g.block(i);
      std::vector<std::uint64_t> rows(e.rows(), 0);
      for (std::size_t k = 0; k < e.rows(); ++k)
        for (std::size_t j = 0; j < e.cols(); ++j)
          if (e(k, j) != 0) rows[k] |= std::uint64_t{1} << j;
      auto& t = table_[i];
      t.assign(inputs, 0);
      for (std::uint64_t a = 1; a < inputs; ++a)
        t[a] = t[a & (a - 1)] ^ rows[static_cast<std::size_t>(std::countr_zero(a))];
    }
    if (injective_) {
      lookup_.reserve(inputs);
      for (std::uint64_t a = 0; a < inputs; ++a) lookup_.emplace(table_[0][a], a);
    }
  }

  Acc make_acc() const { return 0; }

  void partial(std::uint64_t s, Acc& acc) const {
    acc = 0;
    for (std::size_t i = 1; i <= mu_; ++i) {
      acc ^= table_[i][s % inputs_];
      s /= inputs_;
    }
  }

  std::uint32_t weight(const Acc& acc, std::uint64_t a) const {
    return static_cast<std::uint32_t>(std::popcount(table_[0][a] ^ acc));
  }

  template <class Fn>
  void zero_inputs(const Acc& acc, Fn&& fn) const {
    if (injective_) {
      if (auto it = lookup_.find(acc); it != lookup_.end()) fn(it->second);
      return;
    }
    for (std::uint64_t a = 0; a < inputs_; ++a)
      if (table_[0][a] == acc) fn(a);
  }

 private:
  std::size_t mu_;
  std::uint64_t inputs_;
  bool injective_;
  std::vector<std::vector<std::uint64_t>> table_;
  std::unordered_map<std::uint64_t, std::uint64_t> lookup_;
};

class GenericKernel {
 public:
  using Acc = std::vector<Elem>;

  GenericKernel(const PolyMatrix& g, std::size_t mu, std::uint64_t inputs, bool injective)
      : field_(g.field()), n_(g.cols()), mu_(mu), inputs_(inputs), injective_(injective) {
    for (std::size_t i = 0; i <= mu; ++i) table_.push_back(product_table(g.block(i), inputs));
    if (injective_) {
      lookup_.reserve(inputs);
      for (std::uint64_t a = 0; a < inputs; ++a) lookup_.emplace(hash(&table_[0][a * n_]), a);
    }
  }

  Acc make_acc() const { return Acc(n_, 0); }

  void partial(std::uint64_t s, Acc& acc) const {
    std::fill(acc.begin(), acc.end(), 0);
    for (std::size_t i = 1; i <= mu_; ++i) {
      const Elem* row = &table_[i][(s % inputs_) * n_];
      for (std::size_t j = 0; j < n_; ++j) acc[j] = field_.add(acc[j], row[j]);
      s /= inputs_;
    }
  }

  std::uint32_t weight(const Acc& acc, std::uint64_t a) const {
    const Elem* row = &table_[0][a * n_];
    std::uint32_t w = 0;
    for (std::size_t j = 0; j < n_; ++j) w += field_.add(row[j], acc[j]) != 0;
    return w;
  }

  template <class Fn>
  void zero_inputs(const Acc& acc, Fn&& fn) const {
    if (injective_) {
      Acc neg(n_);
      for (std::size_t j = 0; j < n_; ++j) neg[j] = field_.neg(acc[j]);
      auto [lo, hi] = lookup_.equal_range(hash(neg.data()));
      for (auto it = lo; it != hi; ++it)
        if (weight(acc, it->second) == 0) fn(it->second);
      return;
    }
    for (std::uint64_t a = 0; a < inputs_; ++a)
      if (weight(acc, a) == 0) fn(a);
  }

 private:
  std::uint64_t hash(const Elem* v) const {
    std::uint64_t h = 0;
    for (std::size_t j = 0; j < n_; ++j) h = mix(h, v[j]);
    return h;
  }

  Field field_;
  std::size_t n_;
  std::size_t mu_;
  std::uint64_t inputs_;
  bool injective_;
  std::vector<std::vector<Elem>> table_;
  std::unordered_multimap<std::uint64_t, std::uint64_t> lookup_;
};

// Nonzero states joined by zero-weight edges must not contain a cycle.
template <class Kernel>
void reject_zero_cycles(const Kernel& k, std::uint64_t inputs, std::uint64_t states) {
  const std::uint64_t keep = states / inputs;
  std::vector<std::uint32_t> offset(states + 1, 0);
  std::vector<std::uint32_t> targets;
  auto acc = k.make_acc();
  for (std::uint64_t s = 1; s < states; ++s) {
    offset[s] = static_cast<std::uint32_t>(targets.size());
    k.partial(s, acc);
    const std::uint64_t shift = (s % keep) * inputs;
    k.zero_inputs(acc, [&](std::uint64_t a) {
      const std::uint64_t next = shift + a;
      if (next != 0) targets.push_back(static_cast<std::uint32_t>(next));
    });
  }
  offset[states] = static_cast<std::uint32_t>(targets.size());
  if (targets.empty()) return;

  // 0 unseen, 1 on stack, 2 done.
  std::vector<std::uint8_t> color(states, 0);
  std::vector<std::pair<std::uint32_t, std::uint32_t>> stack;
  for (std::uint64_t root = 1; root < states; ++root) {
    if (color[root] != 0) continue;
    stack.emplace_back(static_cast<std::uint32_t>(root), offset[root]);
    color[root] = 1;
    while (!stack.empty()) {
      auto& [v, pos] = stack.back();
      if (pos == offset[v + 1]) {
        color[v] = 2;
        stack.pop_back();
        continue;
      }
      const std::uint32_t w = targets[pos++];
      if (color[w] == 1) {
        throw Error(ErrorCode::kCatastrophic,
                    "encoder state graph has a zero-weight cycle away from the zero state");
      }
      if (color[w] == 0) {
        color[w] = 1;
        stack.emplace_back(w, offset[w]);
      }
    }
  }
}

template <class Kernel>
DistanceReport shortest_cycle(const Kernel& k, const Field& field, std::size_t r,
                              std::uint64_t inputs, std::uint64_t states) {
  constexpr std::uint32_t kInf = std::numeric_limits<std::uint32_t>::max();
  const std::uint64_t keep = states / inputs;
  std::vector<std::uint32_t> dist(states, kInf);
  std::vector<std::uint32_t> pred(states, 0);
  std::vector<bool> settled(states, false);
  std::vector<std::vector<std::uint32_t>> buckets;
  auto push = [&](std::uint64_t s, std::uint32_t d) {
    if (d >= buckets.size()) buckets.resize(d + 1);
    buckets[d].push_back(static_cast<std::uint32_t>(s));
  };

  auto acc = k.make_acc();
  k.partial(0, acc);
  for (std::uint64_t a = 1; a < inputs; ++a) {
    const std::uint32_t w = k.weight(acc, a);
    if (w < dist[a]) {
      dist[a] = w;
      push(a, w);
    }
  }

  std::uint64_t best = kInf;
  std::uint32_t best_pred = 0;
  std::uint64_t work = inputs;
  for (std::size_t d = 0; d < buckets.size() && d < best; ++d) {
    for (std::size_t i = 0; i < buckets[d].size(); ++i) {
      const std::uint32_t s = buckets[d][i];
      if (settled[s] || dist[s] != d) continue;
      settled[s] = true;
      k.partial(s, acc);
      const std::uint64_t shift = (s % keep) * inputs;
      for (std::uint64_t a = 0; a < inputs; ++a) {
        const std::uint64_t nd = d + k.weight(acc, a);
        const std::uint64_t next = shift + a;
        if (next == 0) {
          if (nd < best) {
            best = nd;
            best_pred = s;
          }
        } else if (nd < dist[next]) {
          dist[next] = static_cast<std::uint32_t>(nd);
          pred[next] = s;
          push(next, static_cast<std::uint32_t>(nd));
        }
      }
      work += inputs;
    }
    std::vector<std::uint32_t>().swap(buckets[d]);
  }

  std::vector<std::uint32_t> path;
  for (std::uint32_t s = best_pred; s != 0; s = pred[s]) path.push_back(s);
  std::reverse(path.begin(), path.end());
  InputSequence u(path.size(), std::vector<Elem>(r, 0));
  for (std::size_t t = 0; t < path.size(); ++t) decode_input(path[t] % inputs, field.cardinality(), u[t]);
  trim_trailing(u);

  DistanceReport rep;
  rep.lower = rep.upper = best;
  rep.lower_provenance = "trellis";
  rep.upper_provenance = "trellis";
  rep.witness = std::move(u);
  rep.exact = true;
  rep.method = DistanceMethod::kTrellis;
  rep.work = work;
  return rep;
}

// Depth-first enumeration of inputs by support level.
class InputSearch {
 public:
  InputSearch(const PolyMatrix& g, const SearchLimits& limits)
      : field_(g.field()),
        q_(g.field().cardinality()),
        r_(g.rows()),
        n_(g.cols()),
        mu_(static_cast<std::size_t>(std::max(0, g.degree()))),
        limits_(limits),
        blocks_(g.blocks()),
        cw_((limits.max_degree + mu_ + 1) * g.cols(), 0) {
    blocks_.resize(mu_ + 1, Matrix(field_, r_, n_));
  }

  SearchResult run() {
    const std::uint64_t all = sat_pow(q_, r_);
    const std::uint64_t full_first = all == kSat ? kSat : (all - 1) / (q_ - 1);
    const std::uint64_t full_other = all == kSat ? kSat : all - 1;
    const std::size_t top = std::min(limits_.max_support, limits_.max_degree + 1);
    for (std::size_t k = std::max<std::size_t>(1, limits_.min_support); k <= top && !stop_; ++k) {
      const std::uint64_t places = binom(limits_.max_degree, k - 1);
      const std::uint64_t budget = limits_.guard > res_.visited ? limits_.guard - res_.visited : 0;
      const std::uint64_t full = sat_mul(places, sat_mul(full_first, sat_pow(full_other, k - 1)));
      if (full <= budget) {
        restricted_ = false;
      } else {
        const std::uint64_t light =
            sat_mul(places, sat_mul(r_, sat_pow(sat_mul(r_, q_ - 1), k - 1)));
        res_.complete = false;
        if (light > budget) continue;
        restricted_ = true;
      }
      coeff_.assign(k, std::vector<Elem>(r_, 0));
      pos_.assign(k, 0);
      saved_.assign(k, std::vector<Elem>((mu_ + 1) * n_, 0));
      count_first_ = restricted_ ? r_ : full_first;
      count_other_ = restricted_ ? r_ * (q_ - 1) : full_other;
      descend(0, k, 0);
    }
    return std::move(res_);
  }

 private:
  void fill(bool first, std::uint64_t idx, std::vector<Elem>& v) const {
    std::fill(v.begin(), v.end(), 0);
    if (restricted_) {
      if (first) {
        v[idx] = 1;
      } else {
        v[idx / (q_ - 1)] = static_cast<Elem>(idx % (q_ - 1) + 1);
      }
      return;
    }
    if (first) {
      decode_normalized(idx, q_, v);
    } else {
      decode_input(idx + 1, q_, v);
    }
  }

  std::uint64_t weight_upto(std::size_t blocks) const {
    std::uint64_t w = 0;
    for (std::size_t j = 0; j < blocks * n_; ++j) w += cw_[j] != 0;
    return w;
  }

  void descend(std::size_t j, std::size_t k, std::size_t min_pos) {
    const bool first = j == 0;
    const std::size_t lo = first ? 0 : min_pos;
    const std::size_t hi = first ? 0 : limits_.max_degree - (k - 1 - j);
    const std::uint64_t count = first ? count_first_ : count_other_;
    auto& v = coeff_[j];
    auto& saved = saved_[j];
    for (std::size_t pos = lo; pos <= hi; ++pos) {
      pos_[j] = pos;
      Elem* seg = &cw_[pos * n_];
      for (std::uint64_t idx = 0; idx < count; ++idx) {
        if (stop_) return;
        fill(first, idx, v);
        std::copy(seg, seg + saved.size(), saved.begin());
        for (std::size_t t = 0; t < r_; ++t) {
          if (v[t] == 0) continue;
          for (std::size_t i = 0; i <= mu_; ++i) {
            const auto row = blocks_[i].row(t);
            Elem* out = seg + i * n_;
            for (std::size_t c = 0; c < n_; ++c)
              if (row[c] != 0) out[c] = field_.add(out[c], field_.mul(v[t], row[c]));
          }
        }
        if (j + 1 == k) {
          ++res_.visited;
          const std::uint64_t w = weight_upto(cw_.size() / n_);
          if (w < res_.weight) {
            res_.weight = w;
            record(k);
            if (w <= limits_.stop_at) {
              res_.hit_target = true;
              stop_ = true;
            }
          }
        } else if (weight_upto(pos + 1) < res_.weight) {
          descend(j + 1, k, pos + 1);
        }
        std::copy(saved.begin(), saved.end(), seg);
      }
    }
  }

  void record(std::size_t k) {
    InputSequence u(pos_[k - 1] + 1, std::vector<Elem>(r_, 0));
    for (std::size_t j = 0; j < k; ++j) u[pos_[j]] = coeff_[j];
    res_.witness = std::move(u);
  }

  Field field_;
  std::uint64_t q_;
  std::size_t r_, n_, mu_;
  SearchLimits limits_;
  std::vector<Matrix> blocks_;
  std::vector<Elem> cw_;
  std::vector<std::vector<Elem>> coeff_;
  std::vector<std::size_t> pos_;
  std::vector<std::vector<Elem>> saved_;
  std::uint64_t count_first_ = 0, count_other_ = 0;
  bool restricted_ = false;
  bool stop_ = false;
  SearchResult res_;
};

// Basis of {x : x A = 0}.
std::vector<std::vector<Elem>> left_kernel(const Matrix& a) {
  const Field& f = a.field();
  Matrix m = a.transpose();  // solve m x = 0
  const std::size_t rows = m.rows(), cols = m.cols();
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t c = 0; c < cols && row < rows; ++c) {
    std::size_t p = row;
    while (p < rows && m(p, c) == 0) ++p;
    if (p == rows) continue;
    for (std::size_t j = 0; j < cols; ++j) std::swap(m(p, j), m(row, j));
    const Elem inv = f.inv(m(row, c));
    for (std::size_t j = 0; j < cols; ++j) m(row, j) = f.mul(m(row, j), inv);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == row || m(i, c) == 0) continue;
      const Elem s = m(i, c);
      for (std::size_t j = 0; j < cols; ++j) m(i, j) = f.sub(m(i, j), f.mul(s, m(row, j)));
    }
    pivots.push_back(c);
    ++row;
  }
  std::vector<std::vector<Elem>> basis;
  std::vector<bool> is_pivot(cols, false);
  for (auto c : pivots) is_pivot[c] = true;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Elem> x(cols, 0);
    x[free] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = f.neg(m(i, free));
    basis.push_back(std::move(x));
  }
  return basis;
}

// Memory-1 inputs u_0 + u_1 z with both blocks nonzero, found by growing the
// support of the middle coefficient u_0 E_1 + u_1 E_0.
class AdjacentPairs {
 public:
  AdjacentPairs(const PolyMatrix& g, std::uint64_t floor, std::uint64_t guard)
      : f_(g.field()),
        q_(g.field().cardinality()),
        r_(g.rows()),
        n_(g.cols()),
        floor_(floor),
        guard_(guard),
        e0_(g.block(0)),
        e1_(g.block(1)) {
    const std::vector<Matrix> parts{e1_, e0_};
    stacked_ = Matrix::vstack(parts);
  }

  SearchResult run() {
    std::vector<bool> pick(n_, false);
    for (std::size_t w = 0; w <= n_; ++w) {
      if (res_.weight != SearchResult::kNone && floor_ + w >= res_.weight) break;
      std::fill(pick.begin(), pick.end(), false);
      std::fill(pick.end() - static_cast<std::ptrdiff_t>(w), pick.end(), true);
      do {
        std::vector<std::size_t> zero_cols;
        for (std::size_t c = 0; c < n_; ++c)
          if (!pick[c]) zero_cols.push_back(c);
        scan(zero_cols);
      } while (std::next_permutation(pick.begin(), pick.end()));
    }
    return std::move(res_);
  }

 private:
  // Layout of one image: x M | u0 E0 | u1 E1 | u0 | u1.
  std::size_t width() const { return 3 * n_ + 2 * r_; }

  void image(const std::vector<Elem>& x, Elem* out) const {
    std::fill(out, out + width(), 0);
    for (std::size_t i = 0; i < 2 * r_; ++i) {
      if (x[i] == 0) continue;
      const bool low = i < r_;
      const auto row = stacked_.row(i);
      const auto own = low ? e0_.row(i) : e1_.row(i - r_);
      Elem* side = out + (low ? n_ : 2 * n_);
      for (std::size_t c = 0; c < n_; ++c) {
        out[c] = f_.add(out[c], f_.mul(x[i], row[c]));
        side[c] = f_.add(side[c], f_.mul(x[i], own[c]));
      }
      out[3 * n_ + i] = x[i];
    }
  }

  void scan(const std::vector<std::size_t>& zero_cols) {
    std::vector<std::vector<Elem>> basis;
    if (zero_cols.empty()) {
      for (std::size_t i = 0; i < 2 * r_; ++i) {
        std::vector<Elem> b(2 * r_, 0);
        b[i] = 1;
        basis.push_back(std::move(b));
      }
    } else {
      basis = left_kernel(stacked_.select_cols(zero_cols));
    }
    const std::size_t k = basis.size();
    if (k == 0) return;
    // Weights are scalar invariant, so the leading coefficient is 1.
    const std::uint64_t all = sat_pow(q_, k);
    const std::uint64_t combos = all == kSat ? kSat : (all - 1) / (q_ - 1);
    const std::size_t L = width();
    if (combos == kSat || res_.visited + combos > guard_ || sat_mul(sat_mul(k, q_), L) > (1u << 26)) {
      res_.complete = false;
      return;
    }
    // multiples_[b][d * L ...] = d * image(basis b).
    multiples_.assign(k, std::vector<Elem>(q_ * L, 0));
    for (std::size_t b = 0; b < k; ++b) {
      image(basis[b], &multiples_[b][L]);
      for (std::uint64_t d = 2; d < q_; ++d)
        for (std::size_t j = 0; j < L; ++j)
          multiples_[b][d * L + j] = f_.mul(static_cast<Elem>(d), multiples_[b][L + j]);
    }
    acc_.assign(k + 1, std::vector<Elem>(L, 0));
    for (std::size_t lead = 0; lead < k; ++lead) {
      std::copy_n(&multiples_[lead][L], L, acc_[lead + 1].begin());
      extend(lead + 1, k);
    }
  }

  void extend(std::size_t pos, std::size_t k) {
    const std::size_t L = width();
    const auto& cur = acc_[pos];
    if (pos == k) {
      evaluate(cur);
      return;
    }
    auto& next = acc_[pos + 1];
    for (std::uint64_t d = 0; d < q_; ++d) {
      const Elem* m = &multiples_[pos][d * L];
      for (std::size_t j = 0; j < L; ++j) next[j] = f_.add(cur[j], m[j]);
      extend(pos + 1, k);
    }
  }

  void evaluate(const std::vector<Elem>& v) {
    ++res_.visited;
    auto nonzero = [&](std::size_t from, std::size_t len) {
      return std::any_of(v.begin() + static_cast<std::ptrdiff_t>(from),
                         v.begin() + static_cast<std::ptrdiff_t>(from + len),
                         [](Elem e) { return e != 0; });
    };
    if (!nonzero(3 * n_, r_) || !nonzero(3 * n_ + r_, r_)) return;
    std::uint64_t total = 0;
    for (std::size_t j = 0; j < 3 * n_; ++j) total += v[j] != 0;
    if (total < res_.weight) {
      res_.weight = total;
      const auto lo = v.begin() + static_cast<std::ptrdiff_t>(3 * n_);
      res_.witness = {std::vector<Elem>(lo, lo + static_cast<std::ptrdiff_t>(r_)),
                      std::vector<Elem>(lo + static_cast<std::ptrdiff_t>(r_),
                                        lo + static_cast<std::ptrdiff_t>(2 * r_))};
    }
  }

  Field f_;
  std::uint64_t q_;
  std::size_t r_, n_;
  std::uint64_t floor_, guard_;
  Matrix e0_, e1_, stacked_;
  std::vector<std::vector<Elem>> multiples_;
  std::vector<std::vector<Elem>> acc_;
  SearchResult res_;
};

struct Component {
  std::uint64_t d = 0;
  std::string how;
};

ChebotarevStatus status_of(const ConvCode& code, const UnitScheme* unit) {
  return unit ? unit->chebotarev_status() : code.unit_status;
}

// Smallest w such that some nonzero codeword of the full-rank code spanned by
// e vanishes outside w columns, i.e. the rank drops on the other n - w.
std::optional<std::uint64_t> distance_by_supports(const Matrix& e, std::uint64_t guard) {
  const std::size_t n = e.cols(), k = e.rows();
  std::uint64_t subsets = 0;
  for (std::size_t w = 1; w <= n - k + 1; ++w) {
    subsets += binom(n, w);
    if (subsets > guard) return std::nullopt;
  }
  std::vector<bool> pick(n);
  for (std::size_t w = 1; w <= n - k + 1; ++w) {
    std::fill(pick.begin(), pick.end(), false);
    std::fill(pick.end() - static_cast<std::ptrdiff_t>(w), pick.end(), true);
    do {
      std::vector<std::size_t> rest;
      for (std::size_t c = 0; c < n; ++c)
        if (!pick[c]) rest.push_back(c);
      if (rest.size() < k || rank(e.select_cols(rest)) < k) return w;
    } while (std::next_permutation(pick.begin(), pick.end()));
  }
  return n - k + 1;
}

// Distance of the block code spanned by the rows of e.
Component block_distance(const Matrix& e, const ConvCode& code, const UnitScheme* unit,
                         const DistanceOptions& opts) {
  if (rank(e) < e.rows()) return {0, "rank-deficient"};
  if (sat_pow(e.field().cardinality(), e.rows()) <= opts.linear_guard)
    return {linear_min_distance(e, opts.linear_guard, opts.jobs), "enumerated"};
  if (auto d = distance_by_supports(e, opts.linear_guard / 16)) return {*d, "support rank"};
  if (code.scheme) {
    const auto st = status_of(code, unit);
    if (st == ChebotarevStatus::kVerifiedTrue) return {e.cols() - e.rows() + 1, "mds"};
    if (st == ChebotarevStatus::kAssumed) return {e.cols() - e.rows() + 1, "mds (chebotarev assumed)"};
  }
  return {1, "nonzero"};
}

bool full_row_scheme(const ConvCode& code) {
  if (!code.scheme || code.r != 1) return false;
  const auto& tuples = code.scheme->tuples();
  if (tuples.size() != code.n) return false;
  for (std::size_t i = 0; i < tuples.size(); ++i)
    if (tuples[i].size() != 1 || tuples[i][0] != i) return false;
  return true;
}

}  // namespace

DistanceReport free_distance_exact(const ConvCode& code, const DistanceOptions& opts) {
  const PolyMatrix& g = code.G;
  if (code.r == 0 || code.n == 0) throw Error(ErrorCode::kInvalidArgument, "empty generator");
  const std::uint64_t q = code.field.cardinality();
  const std::size_t mu = code.mu;

  if (mu == 0) {
    SearchLimits lim;
    lim.guard = opts.linear_guard;
    const SearchResult s = bounded_search(g, lim);
    if (!s.complete || s.weight == SearchResult::kNone) {
      throw Error(ErrorCode::kGuardExceeded, "q^r exceeds the enumeration guard");
    }
    DistanceReport rep;
    rep.lower = rep.upper = s.weight;
    rep.lower_provenance = rep.upper_provenance = "enumerated";
    rep.witness = s.witness;
    rep.exact = true;
    rep.method = DistanceMethod::kLinear;
    rep.work = s.visited;
    return rep;
  }

  const std::uint64_t inputs = sat_pow(q, code.r);
  const std::uint64_t states = sat_pow(inputs, mu);
  if (states > opts.state_guard || states >= (std::uint64_t{1} << 32)) {
    throw Error(ErrorCode::kGuardExceeded,
                "trellis has " + (states == kSat ? std::string("too many") : std::to_string(states)) +
                    " states; guard is " + std::to_string(opts.state_guard));
  }
  if (sat_mul(states, inputs) > opts.edge_budget) {
    throw Error(ErrorCode::kGuardExceeded, "trellis edges exceed the budget " + std::to_string(opts.edge_budget));
  }
  const bool injective = rank(g.block(0)) == code.r;
  DistanceReport rep;
  if (q == 2 && code.n <= 64) {
    const BinaryKernel k(g, mu, inputs, injective);
    reject_zero_cycles(k, inputs, states);
    rep = shortest_cycle(k, code.field, code.r, inputs, states);
  } else {
    if (sat_mul(sat_mul(inputs, mu + 1), code.n) > (std::uint64_t{1} << 28)) {
      throw Error(ErrorCode::kGuardExceeded, "trellis edge tables too large");
    }
    const GenericKernel k(g, mu, inputs, injective);
    reject_zero_cycles(k, inputs, states);
    rep = shortest_cycle(k, code.field, code.r, inputs, states);
  }
  if (codeword_weight(g, rep.witness) != rep.upper) {
    throw Error(ErrorCode::kVerificationFailed, "trellis witness does not re-encode to its weight");
  }
  return rep;
}

SearchResult bounded_search(const PolyMatrix& g, const SearchLimits& limits) {
  if (g.rows() == 0 || g.cols() == 0) throw Error(ErrorCode::kInvalidArgument, "empty generator");
  if (limits.min_support > limits.max_support)
    throw Error(ErrorCode::kInvalidArgument, "min_support exceeds max_support");
  InputSearch s(g, limits);
  return s.run();
}

DistanceReport free_distance_bounds(const ConvCode& code, const UnitScheme* unit,
                                    const DistanceOptions& opts) {
  const PolyMatrix& g = code.G;
  DistanceReport rep;
  rep.method = DistanceMethod::kAlgebraic;

  if (code.mu == 0) {
    const Component c = block_distance(g.block(0), code, unit, opts);
    rep.lower = c.d;
    rep.lower_provenance = "block code (" + c.how + ")";
  } else {
    const Component first = block_distance(g.block(0), code, unit, opts);
    const Component last = block_distance(g.block(code.mu), code, unit, opts);
    rep.lower = first.d + last.d;
    rep.lower_provenance = "d(E0) + d(E" + std::to_string(code.mu) + ") (" + first.how + ", " + last.how + ")";
  }
  if (full_row_scheme(code)) {
    const auto st = status_of(code, unit);
    if (st == ChebotarevStatus::kVerifiedTrue || st == ChebotarevStatus::kAssumed) {
      const std::uint64_t sq = static_cast<std::uint64_t>(code.n) * code.n;
      if (sq > rep.lower) {
        rep.lower = sq;
        rep.lower_provenance = st == ChebotarevStatus::kAssumed ? "full-row n^2 (chebotarev assumed)"
                                                                : "full-row n^2";
      }
    }
  }

  if (code.r < code.n) {
    rep.upper = gsb(code.n, code.r, code.delta);
    rep.upper_provenance = "gsb";
  } else {
    rep.upper = code.n * (code.mu + 1);
    rep.upper_provenance = "length";
  }

  if (rep.lower < rep.upper) {
    SearchLimits lim;
    lim.max_degree = code.mu + opts.search_depth;
    lim.max_support = opts.support_cap;
    lim.guard = opts.search_guard;
    lim.stop_at = rep.lower;
    const SearchResult s = bounded_search(g, lim);
    rep.work = s.visited;
    if (s.weight < rep.upper) {
      rep.upper = s.weight;
      rep.upper_provenance = "bounded-search";
      rep.witness = s.witness;
      rep.method = DistanceMethod::kBoundedSearch;
    }
  }
  if (rep.lower > rep.upper) {
    throw Error(ErrorCode::kVerificationFailed,
                "lower bound " + std::to_string(rep.lower) + " exceeds upper bound " + std::to_string(rep.upper));
  }
  rep.exact = rep.lower == rep.upper;
  return rep;
}

SupportProfile support_profile(const ConvCode& code, std::size_t t, const UnitScheme* unit,
                               const DistanceOptions& opts) {
  if (t == 0) throw Error(ErrorCode::kInvalidArgument, "support must be positive");
  const PolyMatrix& g = code.G;
  SupportProfile p;
  p.t = t;

  const Component first = block_distance(g.block(0), code, unit, opts);
  if (code.mu == 0) {
    p.lower = t * first.d;
    p.lower_provenance = "disjoint blocks";
  } else {
    const Component last = block_distance(g.block(code.mu), code, unit, opts);
    p.lower = first.d + last.d;
    p.lower_provenance = "d(E0) + d(E" + std::to_string(code.mu) + ")";
    if (code.mu == 1 && t >= 2 && 2 * code.r <= code.n) {
      const std::vector<Matrix> parts{g.block(1), g.block(0)};
      const Component mid = block_distance(Matrix::vstack(parts), code, unit, opts);
      // Split the support into j runs of consecutive powers; each run
      // contributes d0 + d1 and every interior boundary at least d01.
      const std::uint64_t ends = first.d + last.d;
      const std::uint64_t runs = std::min<std::uint64_t>(t * ends, ends + (t - 1) * mid.d);
      if (runs > p.lower) {
        p.lower = runs;
        p.lower_provenance = "run decomposition (d01 " + mid.how + ")";
      }
    }
  }

  SearchLimits lim;
  lim.max_degree = code.mu + opts.search_depth;
  lim.min_support = t;
  lim.max_support = std::max(t, opts.support_cap);
  lim.guard = opts.search_guard;
  SearchResult s = bounded_search(g, lim);
  p.work = s.visited;
  p.complete = s.complete;
  if (s.weight != SearchResult::kNone) {
    p.upper = s.weight;
    p.upper_provenance = s.complete ? "bounded-search" : "bounded-search (partial)";
    p.witness = std::move(s.witness);
  }
  if (!s.complete && code.mu == 1 && t <= 2 && p.upper > p.lower) {
    AdjacentPairs search(g, first.d + block_distance(g.block(1), code, unit, opts).d, opts.search_guard);
    const SearchResult pairs = search.run();
    p.work += pairs.visited;
    if (pairs.weight < p.upper) {
      p.upper = pairs.weight;
      p.upper_provenance = "adjacent pairs";
      p.witness = pairs.witness;
    }
  }
  if (p.upper == SearchResult::kNone) {
    throw Error(ErrorCode::kGuardExceeded, "support search found no input within the guard");
  }
  if (p.lower > p.upper) {
    throw Error(ErrorCode::kVerificationFailed, "support lower bound exceeds the witness weight");
  }
  return p;
}

}  // namespace unitconv
