// Copyright 2026 The paulisynth Authors
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

#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "paulisynth/circuit.hpp"

namespace paulisynth {

struct QasmDocument {
  std::string text;
};

/// OpenQASM 2.0 text: header, `qreg q[n];`, one statement per gate, and a
/// trailing `// global phase: <value>` comment when the phase is non-zero.
/// Angles use 17 significant digits; every line ends in '\n'.
QasmDocument emit_qasm(const QuantumCircuit& c);

/// Real literal with 17 significant digits that always carries a decimal
/// point ("1.0", "1.3999999999999999", "-2.5e-07").
std::string format_angle(double value);

/// Checks `text` against the statement grammar emit_qasm produces. Returns
/// a description of the first offending line, or nullopt when valid.
std::optional<std::string> validate_qasm(std::string_view text);

}  // namespace paulisynth
