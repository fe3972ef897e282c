// Copyright 2026 The umv Authors
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

#ifndef UMV_CLI_HPP
#define UMV_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace umv {

/// Full command-line entry point, in-process for testability. args excludes
/// the program name. Diagnostics go to err, data to out.
/// Exit codes: 0 acceptance, 1 check failure, 2 decode/parse errors,
/// 64 usage errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace umv

#endif  // UMV_CLI_HPP
