/*
 * Copyright 2026 The distaudit Authors.
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef DISTAUDIT_TOOLS_CLI_H_
#define DISTAUDIT_TOOLS_CLI_H_

#include <ostream>
#include <string>
#include <vector>

namespace distaudit::cli {

// Exit codes: audit completed and every configured criterion holds /
// some criterion fails (or no candidate is feasible) / usage or data error.
inline constexpr int kExitPass = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitError = 2;

// Runs `distaudit <subcommand> ...`. args[0] is the program name. Reports go
// to `out` unless --out is given; diagnostics go to `err`.
int Run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace distaudit::cli

#endif  // DISTAUDIT_TOOLS_CLI_H_
