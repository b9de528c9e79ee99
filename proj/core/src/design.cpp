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

#include "unitconv/design.hpp"

#include <algorithm>
#include <set>

#include "unitconv/polymat.hpp"

namespace unitconv {

ConvCode build_generator(const UnitScheme& unit, const SelectionScheme& scheme) {
  ConvCode code = ConvCode::from_generator(assemble_generator(unit, scheme));
  code.scheme = scheme;
  code.unit_provenance = unit.provenance();
  code.unit_status = unit.chebotarev_status();
  return code;
}

std::uint64_t gsb(std::uint64_t n, std::uint64_t r, std::uint64_t delta) {
  if (r == 0 || r >= n) throw Error(ErrorCode::kInvalidArgument, "GSB needs 1 <= r < n");
  return (n - r) * (delta / r + 1) + delta + 1;
}

namespace {

bool noncatastrophic(const UnitScheme& unit, const std::vector<std::vector<std::size_t>>& tuples) {
  try {
    right_inverse_structured(SelectionScheme(tuples), unit);
    return true;
  } catch (const Error& e) {
    if (e.code() == ErrorCode::kCatastrophic) return false;
    throw;
  }
}

// Visits the sorted r-subsets of {1, ..., n-1} with exactly k members in
// `used`, lexicographically, until `fn` returns true.
template <typename Fn>
bool visit_subsets(std::size_t n, std::size_t r, const std::set<std::size_t>& used, std::size_t k, Fn&& fn) {
  // free_after[x] / used_after[x]: counts within {x, ..., n-1}.
  std::vector<std::size_t> free_after(n + 1, 0), used_after(n + 1, 0);
  for (std::size_t x = n; x-- > 1;) {
    free_after[x] = free_after[x + 1] + (used.count(x) ? 0 : 1);
    used_after[x] = used_after[x + 1] + (used.count(x) ? 1 : 0);
  }
  std::vector<std::size_t> cur;
  auto rec = [&](auto&& self, std::size_t start, std::size_t need_used) -> bool {
    const std::size_t need_free = r - cur.size() - need_used;
    if (cur.size() == r) return fn(cur);
    for (std::size_t x = start; x < n; ++x) {
      if (used_after[x] < need_used || free_after[x] < need_free) break;
      const bool u = used.count(x) > 0;
      if (u ? need_used == 0 : need_free == 0) continue;
      cur.push_back(x);
      const bool stop = self(self, x + 1, need_used - (u ? 1 : 0));
      cur.pop_back();
      if (stop) return true;
    }
    return false;
  };
  return rec(rec, 1, k);
}

}  // namespace

SelectionScheme auto_design(const UnitScheme& unit, std::size_t r, std::size_t mu) {
  const std::size_t n = unit.n();
  if (r == 0 || r >= n) {
    throw Error(ErrorCode::kInfeasibleRate,
                "rate " + std::to_string(r) + "/" + std::to_string(n) + " leaves no room for the reserved row");
  }
  std::vector<std::vector<std::size_t>> tuples;
  std::vector<std::size_t> e0(r);
  for (std::size_t i = 0; i < r; ++i) e0[i] = i;
  tuples.push_back(e0);
  std::set<std::size_t> used(e0.begin(), e0.end());
  std::set<std::vector<std::size_t>> taken;

  auto accept = [&](const std::vector<std::size_t>& t) {
    auto trial = tuples;
    trial.push_back(t);
    if (!noncatastrophic(unit, trial)) return false;
    tuples = std::move(trial);
    taken.insert(t);
    used.insert(t.begin(), t.end());
    return true;
  };

  // Phase 1: fresh subsets, least overlap first.
  while (tuples.size() <= mu) {
    std::size_t free_count = 0;
    for (std::size_t x = 1; x < n; ++x) free_count += used.count(x) ? 0 : 1;
    bool placed = false;
    for (std::size_t k = r > free_count ? r - free_count : 0; k <= r && !placed; ++k) {
      const std::set<std::size_t> snapshot = used;
      placed = visit_subsets(n, r, snapshot, k, [&](const std::vector<std::size_t>& s) {
        if (taken.count(s)) return false;
        if (accept(s)) return true;
        taken.insert(s);  // catastrophic here; do not retry it in this phase
        return false;
      });
    }
    if (!placed) break;
  }

  // Phase 2: reorderings of earlier tuples.
  for (std::size_t src = 1; src < tuples.size() && tuples.size() <= mu; ++src) {
    std::vector<std::size_t> perm = tuples[src];
    while (tuples.size() <= mu && std::next_permutation(perm.begin(), perm.end())) {
      if (!taken.count(perm)) accept(perm);
    }
  }

  // Phase 3: repeats.
  const std::size_t distinct = tuples.size();
  while (tuples.size() <= mu) {
    if (distinct == 1) {
      throw Error(ErrorCode::kInfeasibleRate, "no admissible tuple avoids the reserved row");
    }
    const std::size_t before = tuples.size();
    for (std::size_t src = 1; src < distinct && tuples.size() <= mu; ++src) accept(tuples[src]);
    if (tuples.size() == before) {
      throw Error(ErrorCode::kCatastrophic, "every repeat makes the generator catastrophic");
    }
  }
  return SelectionScheme(std::move(tuples));
}

void certify(ConvCode& code, const UnitScheme* unit) {
  if (code.scheme && unit) {
    std::string method;
    try {
      code.right_inverse = right_inverse_structured(*code.scheme, *unit, &method);
      code.right_inverse_method = method;
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kConditionNotMet) throw;
    }
    try {
      code.check_matrix = check_matrix(*code.scheme, *unit);
      code.check_matrix_method = classify_selection(*code.scheme) == SelectionClass::kDisjoint
                                     ? "disjoint"
                                     : "neumann";
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kConditionNotMet) throw;
    }
  }
  if (!code.right_inverse) {
    auto h = right_invertible_general(code.G);
    if (!h) throw Error(ErrorCode::kCatastrophic, "generator has no polynomial right inverse");
    code.right_inverse = std::move(*h);
    code.right_inverse_method = "general";
  }
  if (!code.check_matrix) {
    code.check_matrix = polynomial_kernel(code.G);
    code.check_matrix_method = "kernel";
  }
}

}  // namespace unitconv
