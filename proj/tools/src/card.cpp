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

#include "ucc/card.hpp"

#include <chrono>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <sstream>

#include "unitconv/error.hpp"
#include "unitconv/matrix.hpp"

namespace ucc {

using unitconv::Elem;
using unitconv::Error;
using unitconv::ErrorCode;
using unitconv::Field;
using unitconv::Matrix;

namespace {

constexpr std::size_t kDenseLimit = 4096;

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorCode::kParse, "card: " + what); }

const json& need(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) bad(std::string("missing key '") + key + "'");
  return j.at(key);
}

template <typename T>
T get(const json& j, const char* key) {
  try {
    return need(j, key).get<T>();
  } catch (const json::exception& e) {
    bad(std::string("bad value for '") + key + "': " + e.what());
  }
}

json tuples_to_json(const std::vector<std::vector<std::size_t>>& t) { return json(t); }

std::vector<std::vector<std::size_t>> tuples_from_json(const json& j) {
  try {
    return j.get<std::vector<std::vector<std::size_t>>>();
  } catch (const json::exception& e) {
    bad(std::string("bad scheme: ") + e.what());
  }
}

json element_to_json(const unitconv::GroupRingElement& a) {
  json terms = json::array();
  for (const auto& [g, c] : a.terms()) {
    const auto [e1, e2] = a.group().exponents(g);
    terms.push_back({e1, e2, elem_to_json(a.field(), c)});
  }
  return {{"group", a.group().name()}, {"terms", terms}};
}

unitconv::GroupRingElement element_from_json(const Field& f, const json& j) {
  const auto group = unitconv::GroupSpec::parse(get<std::string>(j, "group"));
  unitconv::GroupRingElement a(f, group);
  for (const auto& t : need(j, "terms")) {
    if (!t.is_array() || t.size() != 3) bad("group ring term must be [e1, e2, coeff]");
    a.add_term(group.element(t[0].get<std::int64_t>(), t[1].get<std::int64_t>()), elem_from_json(f, t[2]));
  }
  return a;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kInvalidArgument, "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

json field_to_json(const Field& f) {
  return {{"p", f.characteristic()}, {"m", f.degree()}, {"modulus", f.modulus()}};
}

Field field_from_json(const json& j) {
  const auto p = get<std::uint32_t>(j, "p");
  const auto m = get<std::uint32_t>(j, "m");
  if (m == 1) return unitconv::make_field(p);
  return unitconv::make_field(p, m, get<std::vector<std::uint32_t>>(j, "modulus"));
}

json elem_to_json(const Field& f, Elem a) {
  if (f.is_prime_field()) return a;
  return f.coeffs(a);
}

Elem elem_from_json(const Field& f, const json& j) {
  if (f.is_prime_field()) {
    if (!j.is_number_unsigned() || !f.contains(j.get<std::uint64_t>())) bad("field element out of range");
    return j.get<Elem>();
  }
  if (!j.is_array() || j.size() != f.degree()) bad("extension element must be a coefficient array");
  const auto c = j.get<std::vector<std::uint32_t>>();
  for (auto x : c)
    if (x >= f.characteristic()) bad("coefficient out of range");
  return f.from_coeffs(c);
}

json matrix_to_json(const Matrix& m) {
  json out{{"rows", m.rows()}, {"cols", m.cols()}};
  const Field& f = m.field();
  if (m.rows() * m.cols() <= kDenseLimit) {
    json data = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
      json row = json::array();
      for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(elem_to_json(f, m(i, j)));
      data.push_back(std::move(row));
    }
    out["data"] = std::move(data);
  } else {
    json nz = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j)
        if (m(i, j) != 0) nz.push_back({i, j, elem_to_json(f, m(i, j))});
    out["nz"] = std::move(nz);
  }
  return out;
}

Matrix matrix_from_json(const Field& f, const json& j) {
  const auto rows = get<std::size_t>(j, "rows");
  const auto cols = get<std::size_t>(j, "cols");
  Matrix m(f, rows, cols);
  if (j.contains("data")) {
    const json& data = j.at("data");
    if (!data.is_array() || data.size() != rows) bad("matrix row count");
    for (std::size_t i = 0; i < rows; ++i) {
      if (!data[i].is_array() || data[i].size() != cols) bad("matrix column count");
      for (std::size_t c = 0; c < cols; ++c) m(i, c) = elem_from_json(f, data[i][c]);
    }
  } else {
    for (const auto& t : need(j, "nz")) {
      if (!t.is_array() || t.size() != 3) bad("sparse entry must be [i, j, value]");
      const auto i = t[0].get<std::size_t>();
      const auto c = t[1].get<std::size_t>();
      if (i >= rows || c >= cols) bad("sparse entry out of range");
      m(i, c) = elem_from_json(f, t[2]);
    }
  }
  return m;
}

json laurent_to_json(const unitconv::LaurentMatrix& l) {
  json blocks = json::array();
  for (const auto& b : l.blocks()) blocks.push_back(matrix_to_json(b));
  return {{"rows", l.rows()}, {"cols", l.cols()}, {"offset", l.offset()}, {"blocks", blocks}};
}

unitconv::LaurentMatrix laurent_from_json(const Field& f, const json& j) {
  const auto rows = get<std::size_t>(j, "rows");
  const auto cols = get<std::size_t>(j, "cols");
  const auto offset = get<int>(j, "offset");
  std::vector<Matrix> blocks;
  for (const auto& b : need(j, "blocks")) {
    blocks.push_back(matrix_from_json(f, b));
    if (blocks.back().rows() != rows || blocks.back().cols() != cols) bad("block shape");
  }
  if (blocks.empty()) return unitconv::LaurentMatrix(f, rows, cols);
  return unitconv::LaurentMatrix::from_blocks(offset, std::move(blocks));
}

json poly_to_json(const unitconv::PolyMatrix& p) { return laurent_to_json(unitconv::LaurentMatrix(p)); }

unitconv::PolyMatrix poly_from_json(const Field& f, const json& j) {
  const auto l = laurent_from_json(f, j);
  if (!l.is_polynomial()) bad("negative power in a polynomial matrix");
  return l.to_poly();
}

json distance_to_json(const Field& f, const unitconv::DistanceReport& d) {
  json witness = json::array();
  for (const auto& block : d.witness) {
    json b = json::array();
    for (Elem a : block) b.push_back(elem_to_json(f, a));
    witness.push_back(std::move(b));
  }
  return {{"lower", d.lower},
          {"lower_provenance", d.lower_provenance},
          {"upper", d.upper},
          {"upper_provenance", d.upper_provenance},
          {"witness", witness},
          {"exact", d.exact},
          {"method", unitconv::distance_method_name(d.method)},
          {"work", d.work}};
}

unitconv::DistanceReport distance_from_json(const Field& f, const json& j) {
  unitconv::DistanceReport d;
  d.lower = get<std::uint64_t>(j, "lower");
  d.lower_provenance = get<std::string>(j, "lower_provenance");
  d.upper = get<std::uint64_t>(j, "upper");
  d.upper_provenance = get<std::string>(j, "upper_provenance");
  for (const auto& block : need(j, "witness")) {
    std::vector<Elem> b;
    for (const auto& a : block) b.push_back(elem_from_json(f, a));
    d.witness.push_back(std::move(b));
  }
  d.exact = get<bool>(j, "exact");
  d.method = unitconv::parse_distance_method(get<std::string>(j, "method"));
  d.work = get<std::uint64_t>(j, "work");
  return d;
}

json card_to_json(const CodeCard& card) {
  const unitconv::ConvCode& c = card.code;
  const Field& f = c.field;

  json unit{{"kind", card.unit.kind},
            {"provenance", c.unit_provenance},
            {"chebotarev", unitconv::chebotarev_status_name(c.unit_status)},
            {"block_size", card.unit.block_size}};
  if (card.unit.kind == "fourier") unit["fourier_n"] = card.unit.fourier_n;
  if (card.unit.element) unit["element"] = element_to_json(*card.unit.element);
  if (!card.unit.matrix_path.empty()) unit["matrix_path"] = card.unit.matrix_path;

  json certs = json::object();
  certs["right_inverse"] = c.right_inverse
                               ? json{{"method", c.right_inverse_method}, {"matrix", poly_to_json(*c.right_inverse)}}
                               : json(nullptr);
  certs["check_matrix"] = c.check_matrix
                              ? json{{"method", c.check_matrix_method}, {"matrix", poly_to_json(*c.check_matrix)}}
                              : json(nullptr);
  certs["distance"] = c.distance ? distance_to_json(f, *c.distance) : json(nullptr);
  if (c.duality) {
    const auto& d = *c.duality;
    certs["duality"] = {{"kind", unitconv::duality_kind_name(d.kind)},
                        {"check", laurent_to_json(d.check)},
                        {"right_inverse", d.right_inverse ? poly_to_json(*d.right_inverse) : json(nullptr)},
                        {"detail", d.detail},
                        {"characteristic", f.characteristic()}};
  } else {
    certs["duality"] = nullptr;
  }
  if (card.ldpc) {
    certs["ldpc"] = {{"matrix", card.ldpc->matrix},
                     {"max_column_weight", card.ldpc->max_column_weight},
                     {"min_column_weight", card.ldpc->min_column_weight},
                     {"max_row_weight", card.ldpc->max_row_weight},
                     {"has_4cycle", card.ldpc->has_4cycle}};
  } else {
    certs["ldpc"] = nullptr;
  }

  json j;
  j["schema_version"] = card.schema_version;
  j["tool"] = card.tool;
  j["timestamps"] = {{"created", card.created}};
  j["field"] = field_to_json(f);
  j["unit"] = std::move(unit);
  j["n"] = c.n;
  j["r"] = c.r;
  j["delta"] = c.delta;
  j["mu"] = c.mu;
  j["parameters"] = c.parameters();
  j["scheme"] = c.scheme ? tuples_to_json(c.scheme->tuples()) : json(nullptr);
  j["block_scheme"] = card.block_tuples ? tuples_to_json(*card.block_tuples) : json(nullptr);
  j["generator"] = poly_to_json(c.G);
  j["certificates"] = std::move(certs);
  j["flags"] = {{"self_dual", c.flags.self_dual},
                {"dual_containing", c.flags.dual_containing},
                {"ldpc", c.flags.ldpc}};
  return j;
}

CodeCard card_from_json(const json& j) {
  CodeCard card;
  card.schema_version = get<int>(j, "schema_version");
  if (card.schema_version != CodeCard::kSchemaVersion) {
    bad("unsupported schema_version " + std::to_string(card.schema_version));
  }
  card.tool = get<std::string>(j, "tool");
  card.created = get<std::string>(need(j, "timestamps"), "created");
  const Field f = field_from_json(need(j, "field"));

  unitconv::ConvCode c = unitconv::ConvCode::from_generator(poly_from_json(f, need(j, "generator")));
  if (c.n != get<std::size_t>(j, "n") || c.r != get<std::size_t>(j, "r") ||
      c.delta != get<std::size_t>(j, "delta") || c.mu != get<std::size_t>(j, "mu")) {
    throw Error(ErrorCode::kVerificationFailed,
                "card: stored parameters disagree with the generator " + c.parameters());
  }

  const json& unit = need(j, "unit");
  card.unit.kind = get<std::string>(unit, "kind");
  card.unit.block_size = get<std::size_t>(unit, "block_size");
  if (unit.contains("fourier_n")) card.unit.fourier_n = get<std::size_t>(unit, "fourier_n");
  if (unit.contains("element")) card.unit.element = element_from_json(f, unit.at("element"));
  if (unit.contains("matrix_path")) card.unit.matrix_path = get<std::string>(unit, "matrix_path");
  c.unit_provenance = get<std::string>(unit, "provenance");
  c.unit_status = unitconv::parse_chebotarev_status(get<std::string>(unit, "chebotarev"));

  if (!need(j, "scheme").is_null()) {
    c.scheme = unitconv::SelectionScheme(tuples_from_json(j.at("scheme")));
    c.scheme->validate(c.n);
  }
  if (!need(j, "block_scheme").is_null()) card.block_tuples = tuples_from_json(j.at("block_scheme"));

  const json& certs = need(j, "certificates");
  if (const json& ri = need(certs, "right_inverse"); !ri.is_null()) {
    c.right_inverse = poly_from_json(f, need(ri, "matrix"));
    c.right_inverse_method = get<std::string>(ri, "method");
  }
  if (const json& cm = need(certs, "check_matrix"); !cm.is_null()) {
    c.check_matrix = poly_from_json(f, need(cm, "matrix"));
    c.check_matrix_method = get<std::string>(cm, "method");
  }
  if (const json& d = need(certs, "distance"); !d.is_null()) c.distance = distance_from_json(f, d);
  if (const json& d = need(certs, "duality"); !d.is_null()) {
    unitconv::DualityCertificate cert;
    cert.kind = unitconv::parse_duality_kind(get<std::string>(d, "kind"));
    cert.check = laurent_from_json(f, need(d, "check"));
    if (!need(d, "right_inverse").is_null()) cert.right_inverse = poly_from_json(f, d.at("right_inverse"));
    cert.detail = get<std::string>(d, "detail");
    c.duality = std::move(cert);
  }
  if (const json& l = need(certs, "ldpc"); !l.is_null()) {
    LdpcReport r;
    r.matrix = get<std::string>(l, "matrix");
    r.max_column_weight = get<std::size_t>(l, "max_column_weight");
    r.min_column_weight = get<std::size_t>(l, "min_column_weight");
    r.max_row_weight = get<std::size_t>(l, "max_row_weight");
    r.has_4cycle = get<bool>(l, "has_4cycle");
    card.ldpc = r;
  }
  const json& flags = need(j, "flags");
  c.flags.self_dual = get<bool>(flags, "self_dual");
  c.flags.dual_containing = get<bool>(flags, "dual_containing");
  c.flags.ldpc = get<bool>(flags, "ldpc");
  card.code = std::move(c);
  return card;
}

std::string write_card(const CodeCard& card) { return card_to_json(card).dump() + "\n"; }

CodeCard read_card(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    bad(e.what());
  }
  return card_from_json(j);
}

unitconv::UnitScheme rebuild_unit(const CodeCard& card) {
  const Field& f = card.code.field;
  const UnitSource& src = card.unit;
  unitconv::UnitScheme unit;
  if (src.kind == "fourier") {
    unit = unitconv::UnitScheme::fourier(f, src.fourier_n);
  } else if (src.kind == "group-ring" || src.kind == "group-ring-orthogonal") {
    if (!src.element) throw Error(ErrorCode::kInvalidArgument, "card: group ring unit without element");
    const Matrix m = unitconv::to_matrix(*src.element);
    if (src.kind == "group-ring-orthogonal") {
      unit = unitconv::UnitScheme::from_orthogonal(m, card.code.unit_provenance);
    } else {
      const auto inv = unitconv::gr_inverse(*src.element);
      if (!inv) throw Error(ErrorCode::kNotUnit, "card: group ring element is not a unit");
      unit = unitconv::UnitScheme::from_inverse(unitconv::to_matrix(*inv), m, card.code.unit_provenance);
    }
  } else if (src.kind == "matrix" || src.kind == "orthogonal") {
    const Matrix m = unitconv::read_matrix_text(read_file(src.matrix_path));
    unit = src.kind == "matrix" ? unitconv::UnitScheme::from_matrix(m, card.code.unit_provenance)
                                : unitconv::UnitScheme::from_orthogonal(m, card.code.unit_provenance);
  } else {
    throw Error(ErrorCode::kInvalidArgument, "card: no unit scheme recorded");
  }
  if (src.block_size != 0) unit = unit.with_blocks(src.block_size);
  return unit;
}

std::string timestamp_now() {
  std::time_t t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  if (const char* epoch = std::getenv("SOURCE_DATE_EPOCH")) t = static_cast<std::time_t>(std::strtoll(epoch, nullptr, 10));
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

}  // namespace ucc
