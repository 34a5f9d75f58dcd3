// Copyright 2026 The bks Authors
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

#ifndef BKS_CLI_HPP
#define BKS_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace bks::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitDomain = 2;

/// Runs one command line (without the program name). Reports go to `out`,
/// diagnostics to `err`.
///
/// Exit codes: 0 when a result was computed, whatever the verdict; 1 for
/// usage, parse and I/O errors; 2 when the requested quantity does not exist
/// (orthogonal postselection, conditioning on a zero-probability event, ...).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace bks::cli

#endif  // BKS_CLI_HPP
