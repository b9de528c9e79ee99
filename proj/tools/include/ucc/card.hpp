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

#ifndef UCC_CARD_HPP_
#define UCC_CARD_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "unitconv/code.hpp"
#include "unitconv/groupring.hpp"
#include "unitconv/scheme.hpp"

namespace ucc {

using nlohmann::json;

// Where the unit scheme came from; enough to rebuild it.
struct UnitSource {
  // "fourier": Fourier pair of length fourier_n over the card's field.
  // "group-ring": V = to_matrix(element), U its inverse (low-density checks).
  // "group-ring-orthogonal": U = to_matrix(element), V = U^T.
  // "matrix" / "orthogonal": U read from matrix_path.
  // "none": only the generator is known.
  std::string kind = "none";
  std::size_t fourier_n = 0;
  std::optional<unitconv::GroupRingElement> element;
  std::string matrix_path;
  std::size_t block_size = 0;  // 0 when rows are selected individually
};

struct LdpcReport {
  std::size_t max_column_weight = 0;
  std::size_t min_column_weight = 0;
  std::size_t max_row_weight = 0;
  bool has_4cycle = false;
  std::string matrix;  // which matrix was inspected
};

struct CodeCard {
  static constexpr int kSchemaVersion = 1;
  int schema_version = kSchemaVersion;
  unitconv::ConvCode code;
  UnitSource unit;
  // Block tuples the row scheme was expanded from.
  std::optional<std::vector<std::vector<std::size_t>>> block_tuples;
  std::optional<LdpcReport> ldpc;
  std::string created;  // ISO-8601 UTC
  std::string tool;
};

json field_to_json(const unitconv::Field& f);
unitconv::Field field_from_json(const json& j);

json elem_to_json(const unitconv::Field& f, unitconv::Elem a);
unitconv::Elem elem_from_json(const unitconv::Field& f, const json& j);

// Dense rows for small matrices, (i, j, value) triples otherwise.
json matrix_to_json(const unitconv::Matrix& m);
unitconv::Matrix matrix_from_json(const unitconv::Field& f, const json& j);

json poly_to_json(const unitconv::PolyMatrix& p);
unitconv::PolyMatrix poly_from_json(const unitconv::Field& f, const json& j);
json laurent_to_json(const unitconv::LaurentMatrix& l);
unitconv::LaurentMatrix laurent_from_json(const unitconv::Field& f, const json& j);

json distance_to_json(const unitconv::Field& f, const unitconv::DistanceReport& d);
unitconv::DistanceReport distance_from_json(const unitconv::Field& f, const json& j);

json card_to_json(const CodeCard& card);
CodeCard card_from_json(const json& j);

// Compact dump, sorted keys, trailing newline.
std::string write_card(const CodeCard& card);
CodeCard read_card(std::string_view text);

// Rebuilds the unit scheme described by the card.
unitconv::UnitScheme rebuild_unit(const CodeCard& card);

// Current UTC time, or SOURCE_DATE_EPOCH when set.
std::string timestamp_now();

}  // namespace ucc

#endif  // UCC_CARD_HPP_
