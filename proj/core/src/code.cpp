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

#include "unitconv/code.hpp"

#include <algorithm>

#include "unitconv/duality.hpp"

namespace unitconv {

const char* distance_method_name(DistanceMethod m) {
  switch (m) {
    case DistanceMethod::kTrellis: return "trellis";
    case DistanceMethod::kBoundedSearch: return "bounded-search";
    case DistanceMethod::kAlgebraic: return "algebraic";
    case DistanceMethod::kLinear: return "linear";
  }
  return "algebraic";
}

DistanceMethod parse_distance_method(const std::string& s) {
  for (auto m : {DistanceMethod::kTrellis, DistanceMethod::kBoundedSearch,
                 DistanceMethod::kAlgebraic, DistanceMethod::kLinear}) {
    if (s == distance_method_name(m)) return m;
  }
  throw Error(ErrorCode::kParse, "unknown distance method '" + s + "'");
}

const char* duality_kind_name(DualityKind k) {
  return k == DualityKind::kSelfDual ? "self-dual" : "dual-containing";
}

DualityKind parse_duality_kind(const std::string& s) {
  if (s == "self-dual") return DualityKind::kSelfDual;
  if (s == "dual-containing") return DualityKind::kDualContaining;
  throw Error(ErrorCode::kParse, "unknown duality kind '" + s + "'");
}

ConvCode ConvCode::from_generator(PolyMatrix g) {
  ConvCode c;
  c.field = g.field();
  c.n = g.cols();
  c.r = g.rows();
  for (std::size_t i = 0; i < c.r; ++i) {
    std::size_t deg = 0;
    for (std::size_t j = 0; j < c.n; ++j)
      deg = std::max<std::size_t>(deg, static_cast<std::size_t>(std::max(0, upoly::degree(g.entry(i, j)))));
    c.delta += deg;
    c.mu = std::max(c.mu, deg);
  }
  c.G = std::move(g);
  return c;
}

std::string ConvCode::parameters() const {
  return "(" + std::to_string(n) + "," + std::to_string(r) + "," + std::to_string(delta) + ";" +
         std::to_string(mu) + ")";
}

std::vector<std::vector<Elem>> encode(const PolyMatrix& g, const InputSequence& u) {
  const Field& f = g.field();
  if (u.empty() || g.is_zero()) return {};
  const std::size_t len = u.size() + g.blocks().size() - 1;
  std::vector<std::vector<Elem>> out(len, std::vector<Elem>(g.cols(), 0));
  for (std::size_t t = 0; t < u.size(); ++t) {
    if (u[t].size() != g.rows()) throw Error(ErrorCode::kDimensionMismatch, "input block has wrong length");
    for (std::size_t i = 0; i < g.blocks().size(); ++i) {
      const Matrix& b = g.blocks()[i];
      auto& dst = out[t + i];
      for (std::size_t k = 0; k < g.rows(); ++k) {
        const Elem a = u[t][k];
        if (a == 0) continue;
        const auto row = b.row(k);
        for (std::size_t j = 0; j < g.cols(); ++j)
          if (row[j] != 0) dst[j] = f.add(dst[j], f.mul(a, row[j]));
      }
    }
  }
  return out;
}

std::uint64_t codeword_weight(const PolyMatrix& g, const InputSequence& u) {
  std::uint64_t w = 0;
  for (const auto& block : encode(g, u)) w += weight(block);
  return w;
}

void verify_certificates(const ConvCode& code) {
  const PolyMatrix& g = code.G;
  if (code.right_inverse && !(g * *code.right_inverse == PolyMatrix::identity(code.field, code.r))) {
    throw Error(ErrorCode::kVerificationFailed, "right inverse: G H != I");
  }
  if (code.check_matrix) {
    if (!(g * *code.check_matrix).is_zero()) {
      throw Error(ErrorCode::kVerificationFailed, "check matrix: G K != 0");
    }
    if (code.check_matrix->cols() != code.n - code.r) {
      throw Error(ErrorCode::kVerificationFailed, "check matrix has the wrong number of columns");
    }
  }
  if (code.distance) {
    const auto& d = *code.distance;
    if (d.lower > d.upper || (d.exact && d.lower != d.upper)) {
      throw Error(ErrorCode::kVerificationFailed, "distance: inconsistent bounds");
    }
    if (!d.witness.empty() && codeword_weight(g, d.witness) != d.upper) {
      throw Error(ErrorCode::kVerificationFailed, "distance: witness does not re-encode to the upper bound");
    }
  }
  if (code.duality) {
    const auto& c = *code.duality;
    if (c.kind == DualityKind::kSelfDual) {
      if (!is_self_dual(code)) throw Error(ErrorCode::kVerificationFailed, "self-dual identity fails");
    } else {
      if (!c.right_inverse || !dual_contained(g, c.check, *c.right_inverse)) {
        throw Error(ErrorCode::kVerificationFailed, "dual-containing certificate fails");
      }
    }
  }
}

}  // namespace unitconv
