// Copyright 2026 The normtower Authors
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

#ifndef NORMTOWER_CLI_H_
#define NORMTOWER_CLI_H_

#include <ostream>
#include <string>
#include <vector>

namespace normtower {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomain = 1;  // bad config, failed precondition or check
inline constexpr int kExitUsage = 2;

/// Runs one `normtower` command. args excludes the program name. Reports go
/// to out, diagnostics to err.
int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err);

}  // namespace normtower

#endif  // NORMTOWER_CLI_H_
