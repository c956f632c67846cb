// Copyright 2026 The qhdyn Authors
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

#ifndef QHDYN_COMMANDS_H_
#define QHDYN_COMMANDS_H_

#include <iosfwd>
#include <string>
#include <vector>

#include "qhdyn/builtins.h"
#include "qhdyn/scenario.h"
#include "qhdyn/verify.h"

namespace qhdyn {

enum ExitCode : int {
  kExitOk = 0,
  kExitVerdictFailed = 1,
  kExitUsage = 2,  // also IO errors
  kExitValidation = 3,
};

inline constexpr const char* kCsvHeader =
    "t,unitarity_defect,norm_phys,res_naive,res_corrected,res_metric,res_qh";

// Header plus one line per row, every number with 17 significant digits.
void write_csv(const std::vector<DiagnosticsRow>& rows, std::ostream& out);

void write_verdicts(const std::vector<Verdict>& verdicts, std::ostream& out);

// Resolves --scenario: an existing file is parsed, otherwise the argument is
// looked up in the registry. Throws IoError for missing files and
// ValidationError for unknown builtin names.
Scenario resolve_scenario(const std::string& arg,
                          const BuiltinRegistry& registry);

// Writes the CSV to out_path ("-" or empty: to `out`, with the verdict
// summary going to `err`) and the verdict summary to `out`.
int cmd_run(const Scenario& s, const std::string& out_path, std::ostream& out,
            std::ostream& err);

// Side-by-side naive and corrected residuals with the physical-norm drift.
int cmd_demo(const Scenario& s, std::ostream& out, std::ostream& err);

int cmd_list(const BuiltinRegistry& registry, std::ostream& out);

// Full command-line entry point: qhdyn {run|demo|list} [flags].
int run_cli(int argc, const char* const* argv, const BuiltinRegistry& registry,
            std::ostream& out, std::ostream& err);

}  // namespace qhdyn

#endif  // QHDYN_COMMANDS_H_
