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

#ifndef UCC_COMMANDS_HPP_
#define UCC_COMMANDS_HPP_

#include <iosfwd>
#include <string>
#include <vector>

namespace ucc {

// Exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;  // verification, acceptance or input error
inline constexpr int kExitGuard = 2;    // a configured guard was exceeded

// Runs one ucc command line (args excludes the program name). Errors are
// written to `err` as one-line JSON objects with a "code" field.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ucc

#endif  // UCC_COMMANDS_HPP_
