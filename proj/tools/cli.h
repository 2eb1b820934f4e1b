// Copyright 2026 The qsynth4 Authors
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


#ifndef QSYNTH4_TOOLS_CLI_H
#define QSYNTH4_TOOLS_CLI_H

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "qsynth4/benchmarks.h"

namespace qsynth4::cli {

enum ExitCode : int {
    kExitOk = 0,
    kExitVerifyFailed = 1,
    kExitInputError = 2,
};

/// Runs one command. `args` excludes the program name.
int run(std::vector<std::string> args, std::ostream &out, std::ostream &err);

struct BenchRow {
    std::string name;
    /// "ok", "skipped" (source file missing) or "failed".
    std::string status;
    std::string source;
    std::string note;
    int inputs = 0;
    int outputs = 0;
    int max_ancilla = 0;
    int reduced_ancilla = 0;
    int levels = 0;
    int declared_cost = 0;
    int actual_cost = 0;
    bool verified = false;
    const ReferenceRow *reference = nullptr;
};

/// Built-in generators are synthesized directly; the others are read from
/// `<dir>/<name>.pla`.
BenchRow bench_one(const std::string &name, const std::string &dir);

std::string default_benchmark_dir();

}  // namespace qsynth4::cli

#endif
