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

#include "paulisynth/qasm.hpp"

#include <cstdio>
#include <regex>
#include <vector>

namespace paulisynth {

std::string format_angle(double value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", value);
  std::string s(buf);
  if (s.find('.') == std::string::npos) {
    const auto exp = s.find_first_of("eE");
    s.insert(exp == std::string::npos ? s.size() : exp, ".0");
  }
  return s;
}

QasmDocument emit_qasm(const QuantumCircuit& c) {
  std::string out;
  out += "OPENQASM 2.0;\n";
  out += "include \"qelib1.inc\";\n";
  out += "qreg q[" + std::to_string(c.n_qubits()) + "];\n";
  for (const Gate& g : c.gates()) {
    out += gate_name(g.kind());
    if (is_rotation(g.kind())) out += "(" + format_angle(g.angle()) + ")";
    out += " q[" + std::to_string(g.qubit(0)) + "]";
    if (g.arity() == 2) out += ",q[" + std::to_string(g.qubit(1)) + "]";
    out += ";\n";
  }
  // OpenQASM 2.0 has no global phase statement.
  if (c.global_phase() != 0.0) {
    out += "// global phase: " + format_angle(c.global_phase()) + "\n";
  }
  return QasmDocument{std::move(out)};
}

namespace {

std::optional<unsigned long> to_index(const std::string& digits) {
  if (digits.size() > 9) return std::nullopt;
  return std::stoul(digits);
}

}  // namespace

std::optional<std::string> validate_qasm(std::string_view text) {
  static const std::string real =
      R"(-?(?:[0-9]+\.[0-9]*|\.[0-9]+)(?:[eE][-+]?[0-9]+)?)";
  static const std::regex qreg(R"(qreg q\[([0-9]+)\];)");
  static const std::regex one_qubit(R"((?:h|s|sdg) q\[([0-9]+)\];)");
  static const std::regex rotation("(?:rz|rx)\\(" + real +
                                   R"(\) q\[([0-9]+)\];)");
  static const std::regex two_qubit(R"((?:cx|cz) q\[([0-9]+)\],q\[([0-9]+)\];)");
  static const std::regex phase("// global phase: " + real);

  if (text.empty() || text.back() != '\n') {
    return "document must end with a newline";
  }
  std::vector<std::string> lines;
  std::size_t start = 0;
  while (start < text.size()) {
    const std::size_t end = text.find('\n', start);
    lines.emplace_back(text.substr(start, end - start));
    start = end + 1;
  }

  auto at = [](std::size_t i, const std::string& why) {
    return "line " + std::to_string(i + 1) + ": " + why;
  };
  if (lines.size() < 3) return "missing header";
  if (lines[0] != "OPENQASM 2.0;") return at(0, "expected OPENQASM 2.0 header");
  if (lines[1] != "include \"qelib1.inc\";") {
    return at(1, "expected qelib1.inc include");
  }
  std::smatch m;
  if (!std::regex_match(lines[2], m, qreg)) return at(2, "expected qreg q[n];");
  const auto n = to_index(m[1].str());
  if (!n || *n == 0) return at(2, "bad register size");

  for (std::size_t i = 3; i < lines.size(); ++i) {
    const std::string& line = lines[i];
    if (std::regex_match(line, m, one_qubit) ||
        std::regex_match(line, m, rotation)) {
      const auto q = to_index(m[1].str());
      if (!q || *q >= *n) return at(i, "qubit out of range");
    } else if (std::regex_match(line, m, two_qubit)) {
      const auto a = to_index(m[1].str());
      const auto b = to_index(m[2].str());
      if (!a || !b || *a >= *n || *b >= *n) {
        return at(i, "qubit out of range");
      }
      if (*a == *b) return at(i, "two-qubit gate on one qubit");
    } else if (std::regex_match(line, phase)) {
      if (i + 1 != lines.size()) return at(i, "global phase must come last");
    } else {
      return at(i, "unrecognized statement '" + line + "'");
    }
  }
  return std::nullopt;
}

}  // namespace paulisynth
