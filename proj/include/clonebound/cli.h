// Copyright 2026 The clonebound Authors
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

#ifndef CLONEBOUND_CLI_H
#define CLONEBOUND_CLI_H

#include <ostream>

namespace clonebound::cli {

/// Exit codes shared by every subcommand.
enum ExitCode : int {
    kOk = 0,
    kUsage = 1,
    kIo = 2,
    kViolation = 3,
    kAttainment = 4,
};

/// Entry point for the `clonebound` tool: bounds, cloner, lemmas, verify.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace clonebound::cli

#endif  // CLONEBOUND_CLI_H
