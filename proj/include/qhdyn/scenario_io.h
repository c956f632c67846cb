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

// JSON scenario files. The schema is documented in docs/scenario-format.md.

#ifndef QHDYN_SCENARIO_IO_H_
#define QHDYN_SCENARIO_IO_H_

#include <string>
#include <string_view>

#include "qhdyn/builtins.h"
#include "qhdyn/scenario.h"

namespace qhdyn {

// Throws ParseError(line, ...) for malformed JSON and ValidationError for
// schema violations or models failing the numerical gates.
Scenario parse_scenario(std::string_view text,
                        const BuiltinRegistry& registry =
                            BuiltinRegistry::standard());

// Inverse of parse_scenario. Closed-form schedules are only serializable
// through their builtin name.
std::string serialize_scenario(const Scenario& s);

// Reads a file and parses it. Throws IoError when it cannot be read.
Scenario load_scenario_file(const std::string& path,
                            const BuiltinRegistry& registry =
                                BuiltinRegistry::standard());

// Parses a [[re, im], ...] vector literal.
ComplexVector parse_vector_literal(std::string_view json_text);
// Parses a row-major [[[re, im], ...], ...] square matrix literal.
ComplexMatrix parse_matrix_literal(std::string_view json_text);

}  // namespace qhdyn

#endif  // QHDYN_SCENARIO_IO_H_
