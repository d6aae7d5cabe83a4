// Copyright 2026 The edgeqaoa Authors
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

#ifndef EDGEQAOA_CLI_H_
#define EDGEQAOA_CLI_H_

#include <iosfwd>

namespace edgeqaoa {

inline constexpr int kExitOk = 0;
inline constexpr int kExitValidation = 1;
inline constexpr int kExitRuntime = 2;

/// Entry point for the `edgeqaoa` tool. Subcommands: run, oracle, plan, tail.
int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace edgeqaoa

#endif  // EDGEQAOA_CLI_H_
