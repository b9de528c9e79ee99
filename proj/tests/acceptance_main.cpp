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

// Acceptance runner: one PASS/FAIL line per criterion, exit 1 on any FAIL.

#include <cstdlib>
#include <iostream>
#include <string>

#include "ucc/repro.hpp"

int main(int argc, char** argv) {
  ucc::ReproOptions opts;
  for (int i = 1; i + 1 < argc; i += 2) {
    const std::string key = argv[i];
    if (key == "--only") opts.only = argv[i + 1];
    else if (key == "--seed") opts.seed = std::strtoull(argv[i + 1], nullptr, 10);
    else if (key == "--jobs") opts.jobs = static_cast<unsigned>(std::strtoul(argv[i + 1], nullptr, 10));
  }
  bool all = true;
  ucc::run_repro(opts, [&](const ucc::CriterionResult& r) {
    std::cout << ucc::format_result(r) << std::endl;
    all = all && r.pass;
  });
  std::cout << (all ? "ALL PASS" : "SOME CRITERIA FAILED") << std::endl;
  return all ? 0 : 1;
}
