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

#include "unitconv/scheme.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace unitconv {

const char* chebotarev_status_name(ChebotarevStatus s) {
  switch (s) {
    case ChebotarevStatus::kVerifiedTrue: return "verified-true";
    case ChebotarevStatus::kVerifiedFalse: return "verified-false";
    case ChebotarevStatus::kAssumed: return "assumed";
    case ChebotarevStatus::kUnknown: return "unknown";
  }
  return "unknown";
}

ChebotarevStatus parse_chebotarev_status(const std::string& s) {
  for (auto v : {ChebotarevStatus::kVerifiedTrue, ChebotarevStatus::kVerifiedFalse,
                 ChebotarevStatus::kAssumed, ChebotarevStatus::kUnknown}) {
    if (s == chebotarev_status_name(v)) return v;
  }
  throw Error(ErrorCode::kParse, "unknown Chebotarev status '" + s + "'");
}

UnitScheme UnitScheme::from_inverse(Matrix U, Matrix V, std::string provenance) {
  if (U.rows() != U.cols() || V.rows() != V.cols() || U.rows() != V.rows()) {
    throw Error(ErrorCode::kDimensionMismatch, "unit scheme needs two n x n matrices");
  }
  if (!(U.field() == V.field())) throw Error(ErrorCode::kFieldMismatch, "U and V over different fields");
  if (!(U * V).is_identity()) throw Error(ErrorCode::kNotUnit, "UV is not the identity");
  UnitScheme s;
  s.U_ = std::move(U);
  s.V_ = std::move(V);
  s.provenance_ = std::move(provenance);
  return s;
}

UnitScheme UnitScheme::from_matrix(Matrix U, std::string provenance) {
  Matrix V;
  try {
    V = invert(U);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::kSingular) throw Error(ErrorCode::kNotUnit, "U is singular");
    throw;
  }
  return from_inverse(std::move(U), std::move(V), std::move(provenance));
}

UnitScheme UnitScheme::from_orthogonal(Matrix U, std::string provenance) {
  if (!is_orthogonal(U)) throw Error(ErrorCode::kNotOrthogonal, "U U^T is not the identity");
  Matrix V = U.transpose();
  return from_inverse(std::move(U), std::move(V), std::move(provenance));
}

UnitScheme UnitScheme::fourier(const Field& field, std::size_t n, std::size_t guard) {
  auto fp = fourier_matrix(field, n);
  UnitScheme s = from_inverse(std::move(fp.U), std::move(fp.V),
                              "fourier n=" + std::to_string(n) + " over " + field.name());
  if (n <= guard && n <= 13) {
    s.verify_chebotarev(guard);
  } else if (is_prime(n)) {
    const std::uint64_t p = field.characteristic();
    const bool germain = field.is_prime_field() && p == 2 * n + 1;
    const bool cyclotomic = p != n && field.degree() == n - 1 &&
                            multiplicative_order(p % n, n) == n - 1;
    s.status_ = germain || cyclotomic ? ChebotarevStatus::kAssumed : ChebotarevStatus::kUnknown;
  }
  return s;
}

ChebotarevStatus UnitScheme::verify_chebotarev(std::size_t guard, unsigned jobs) {
  status_ = chebotarev_check(V_, guard, jobs).holds ? ChebotarevStatus::kVerifiedTrue
                                                    : ChebotarevStatus::kVerifiedFalse;
  return status_;
}

UnitScheme UnitScheme::with_blocks(std::size_t b) const {
  if (b == 0 || n() % b != 0) {
    throw Error(ErrorCode::kNoBlockPartition,
                "block size " + std::to_string(b) + " does not divide " + std::to_string(n()));
  }
  UnitScheme out = *this;
  out.block_size_ = b;
  return out;
}

SelectionScheme::SelectionScheme(std::vector<std::vector<std::size_t>> tuples)
    : tuples_(std::move(tuples)) {
  if (tuples_.empty() || tuples_.front().empty()) {
    throw Error(ErrorCode::kInvalidArgument, "selection scheme needs a nonempty E_0");
  }
  for (const auto& t : tuples_) {
    if (t.size() != tuples_.front().size()) {
      throw Error(ErrorCode::kInvalidArgument, "all tuples must have the same length");
    }
    std::set<std::size_t> seen(t.begin(), t.end());
    if (seen.size() != t.size()) {
      throw Error(ErrorCode::kInvalidArgument, "repeated index inside a tuple");
    }
  }
}

void SelectionScheme::validate(std::size_t n) const {
  for (const auto& t : tuples_)
    for (auto i : t)
      if (i >= n) {
        throw Error(ErrorCode::kIndexOutOfRange,
                    "row index " + std::to_string(i) + " out of range for n=" + std::to_string(n));
      }
  if (r() > n) throw Error(ErrorCode::kInfeasibleRate, "more rows per tuple than rows in U");
}

std::string SelectionScheme::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < tuples_.size(); ++i) {
    if (i) os << '/';
    for (std::size_t k = 0; k < tuples_[i].size(); ++k) os << (k ? "," : "") << tuples_[i][k];
  }
  return os.str();
}

SelectionScheme SelectionScheme::parse(const std::string& text) {
  std::vector<std::vector<std::size_t>> tuples;
  std::stringstream groups(text);
  std::string group;
  while (std::getline(groups, group, '/')) {
    std::vector<std::size_t> t;
    std::stringstream items(group);
    std::string item;
    while (std::getline(items, item, ',')) {
      if (item.empty() || item.find_first_not_of("0123456789 ") != std::string::npos) {
        throw Error(ErrorCode::kParse, "bad scheme index '" + item + "' in '" + text + "'");
      }
      t.push_back(std::stoul(item));
    }
    tuples.push_back(std::move(t));
  }
  return SelectionScheme(std::move(tuples));
}

const char* selection_class_name(SelectionClass c) {
  switch (c) {
    case SelectionClass::kDisjoint: return "disjoint";
    case SelectionClass::kUniqueRow: return "unique-row";
    case SelectionClass::kUnknown: return "unknown";
  }
  return "unknown";
}

SelectionClass classify_selection(const SelectionScheme& scheme) {
  std::set<std::size_t> later;
  for (std::size_t i = 1; i < scheme.tuples().size(); ++i)
    later.insert(scheme.tuple(i).begin(), scheme.tuple(i).end());
  const auto& e0 = scheme.tuple(0);
  const auto shared = std::count_if(e0.begin(), e0.end(), [&](std::size_t x) { return later.count(x) > 0; });
  if (shared == 0) return SelectionClass::kDisjoint;
  if (static_cast<std::size_t>(shared) < e0.size()) return SelectionClass::kUniqueRow;
  return SelectionClass::kUnknown;
}

SelectionScheme block_scheme(const UnitScheme& unit,
                             const std::vector<std::vector<std::size_t>>& blocks) {
  if (!unit.block_size()) throw Error(ErrorCode::kNoBlockPartition, "unit has no block partition");
  const std::size_t b = *unit.block_size();
  std::vector<std::vector<std::size_t>> rows;
  for (const auto& t : blocks) {
    std::vector<std::size_t> expanded;
    for (auto k : t) {
      if (k >= unit.block_count()) {
        throw Error(ErrorCode::kIndexOutOfRange, "block index " + std::to_string(k) + " out of range");
      }
      for (std::size_t j = 0; j < b; ++j) expanded.push_back(k * b + j);
    }
    rows.push_back(std::move(expanded));
  }
  SelectionScheme s(std::move(rows));
  s.block_tuples_ = blocks;
  s.block_size_ = b;
  return s;
}

}  // namespace unitconv
