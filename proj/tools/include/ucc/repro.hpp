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

#ifndef UCC_REPRO_HPP_
#define UCC_REPRO_HPP_

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace ucc {

struct ReproOptions {
  std::uint64_t seed = 20260501;
  unsigned jobs = 1;
  // Comma-separated criterion ids or group names; empty selects everything.
  std::string only;
};

struct Criterion {
  int id = 0;
  std::string group;
  std::string title;
  std::string tolerance;
};

struct CriterionResult {
  Criterion criterion;
  bool pass = false;
  std::string detail;
  double seconds = 0;
};

const std::vector<Criterion>& criteria();

// Throws unitconv::Error(kInvalidArgument) when `only` names nothing.
std::vector<Criterion> select_criteria(const std::string& only);

CriterionResult run_criterion(const Criterion& c, const ReproOptions& opts);

// Runs the selection in id order, reporting each result as it finishes.
std::vector<CriterionResult> run_repro(const ReproOptions& opts,
                                       const std::function<void(const CriterionResult&)>& on_result = {});

// "criterion 4 [distance] PASS (1.23 s, tolerance: exact): ..."
std::string format_result(const CriterionResult& r);
nlohmann::json result_to_json(const CriterionResult& r);

}  // namespace ucc

#endif  // UCC_REPRO_HPP_
