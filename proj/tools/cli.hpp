// Copyright 2026 The udcodes Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef UDCODES_TOOLS_CLI_HPP_
#define UDCODES_TOOLS_CLI_HPP_

// The udcodes command line: decide, count, rho, verify and table. Every
// command writes one JSON document (or CSV for table) to `out`.

#include <string>
#include <vector>

namespace udcodes::cli {

enum ExitCode : int {
  kOk = 0,
  kVerificationFailed = 1,
  kUsage = 2,
  kBudgetExceeded = 3,
  kUncoveredFamily = 4,
};

struct CliResult {
  int exit_code = kOk;
  std::string out;
  std::string err;
};

// args excludes the program name.
CliResult run_cli(const std::vector<std::string>& args);

}  // namespace udcodes::cli

#endif  // UDCODES_TOOLS_CLI_HPP_
