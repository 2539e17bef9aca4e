// Copyright 2026 The arealab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace arealab::cli {

/// Exit codes of `arealab`.
enum ExitCode : int {
    kPass = 0,
    kAuditFailed = 1,
    kInvalidConfig = 2,
    kInfeasible = 3,
};

/// Runs one subcommand. `args` excludes the program name. The JSON report goes
/// to `out` (and to --out DIR when given); diagnostics go to `err` as a
/// single line.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace arealab::cli
