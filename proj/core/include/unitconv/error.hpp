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

#ifndef UNITCONV_ERROR_HPP_
#define UNITCONV_ERROR_HPP_

#include <stdexcept>
#include <string>
#include <string_view>

namespace unitconv {

enum class ErrorCode {
  kInvalidArgument,
  kNonPrimeCharacteristic,
  kReducibleModulus,
  kNoSuchRoot,
  kNoValidField,
  kSearchLimitExceeded,
  kSingular,
  kGuardExceeded,
  kDimensionMismatch,
  kFieldMismatch,
  kConditionNotMet,
  kCatastrophic,
  kIndexOutOfRange,
  kInfeasibleRate,
  kNoBlockPartition,
  kGroupMismatch,
  kWrongRate,
  kNotOrthogonal,
  kWrongCharacteristic,
  kNotUnit,
  kVerificationFailed,
  kParse,
};

// Stable identifier used in machine-readable error output.
std::string_view error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace unitconv

#endif  // UNITCONV_ERROR_HPP_
