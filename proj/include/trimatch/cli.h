// Copyright 2026 The trimatch Authors
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

#ifndef TRIMATCH_CLI_H_
#define TRIMATCH_CLI_H_

#include <ostream>
#include <string>
#include <vector>

namespace trimatch::cli {

// Stable exit statuses.
inline constexpr int kExitOk = 0;
inline constexpr int kExitNegative = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitCounterexample = 3;

// Runs the command line `args` (args[0] is the program name). Results go to
// `out`, diagnostics to `err`.
int Run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace trimatch::cli

#endif  // TRIMATCH_CLI_H_
