// Copyright 2026 The pumgab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <ostream>

namespace pumgab::cli {

enum ExitCode : int {
    kExitOk = 0,
    kExitValidation = 1,  // a construction, verification or input check failed
    kExitIo = 2,          // unreadable, unwritable or malformed files
    kExitBudget = 3,      // a search exceeded its configured budget
    kExitUsage = 64,
};

// Entry point of the `pumgab` tool: construct, verify, distance, encode,
// weight. Reports go to files; a human summary goes to `out`, diagnostics to
// `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace pumgab::cli
