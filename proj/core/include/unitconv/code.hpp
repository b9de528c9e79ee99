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

#ifndef UNITCONV_CODE_HPP_
#define UNITCONV_CODE_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "unitconv/polymat.hpp"
#include "unitconv/scheme.hpp"

namespace unitconv {

enum class DistanceMethod { kTrellis, kBoundedSearch, kAlgebraic, kLinear };

const char* distance_method_name(DistanceMethod m);
DistanceMethod parse_distance_method(const std::string& s);

// Input sequence u(z) = sum_t u_t z^t, one length-r block per power.
using InputSequence = std::vector<std::vector<Elem>>;

struct DistanceReport {
  std::uint64_t lower = 0;
  std::string lower_provenance;
  std::uint64_t upper = 0;
  std::string upper_provenance;
  // Empty when the upper bound is not backed by a codeword.
  InputSequence witness;
  bool exact = false;
  DistanceMethod method = DistanceMethod::kAlgebraic;
  std::uint64_t work = 0;
};

enum class DualityKind { kSelfDual, kDualContaining };

const char* duality_kind_name(DualityKind k);
DualityKind parse_duality_kind(const std::string& s);

struct DualityCertificate {
  DualityKind kind = DualityKind::kSelfDual;
  // Self-dual: K = z^mu G(z^{-1})^T with G K = 0. Dual-containing: the check
  // matrix H (G H = 0) whose dual rows H(z^{-1})^T were tested.
  LaurentMatrix check;
  // Right inverse used for the containment test (dual-containing only).
  std::optional<PolyMatrix> right_inverse;
  std::string detail;
};

struct CodeFlags {
  bool self_dual = false;
  bool dual_containing = false;
  bool ldpc = false;
};

// A convolutional code given by an r x n polynomial generator together with
// whatever certificates have been attached to it.
struct ConvCode {
  Field field;
  PolyMatrix G;
  std::size_t n = 0;
  std::size_t r = 0;
  std::size_t delta = 0;  // sum of row degrees
  std::size_t mu = 0;     // largest row degree

  std::optional<SelectionScheme> scheme;
  std::string unit_provenance;
  ChebotarevStatus unit_status = ChebotarevStatus::kUnknown;

  std::optional<PolyMatrix> right_inverse;
  std::string right_inverse_method;
  std::optional<PolyMatrix> check_matrix;
  std::string check_matrix_method;
  std::optional<DistanceReport> distance;
  std::optional<DualityCertificate> duality;
  CodeFlags flags;

  // Parameters from the shape and row degrees of g; no certificates.
  static ConvCode from_generator(PolyMatrix g);

  // "(n,r,delta;mu)".
  std::string parameters() const;
};

// Coefficients of u(z) G(z), one length-n block per power.
std::vector<std::vector<Elem>> encode(const PolyMatrix& g, const InputSequence& u);
// Total Hamming weight of u(z) G(z).
std::uint64_t codeword_weight(const PolyMatrix& g, const InputSequence& u);

// Re-checks every attached certificate by multiplication; throws
// kVerificationFailed naming the first one that does not hold.
void verify_certificates(const ConvCode& code);

}  // namespace unitconv

#endif  // UNITCONV_CODE_HPP_
