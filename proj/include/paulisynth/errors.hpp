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

#include <cstddef>
#include <stdexcept>
#include <string>

namespace paulisynth {

/// Raised for malformed Pauli labels and Hamiltonian expressions.
/// `position()` is a character offset into the text that was parsed.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t position, const std::string& message)
      : std::runtime_error(
            "parse error at position " + std::to_string(position) + ": " +
            message),
        position_(position),
        message_(message) {}

  std::size_t position() const noexcept { return position_; }
  const std::string& message() const noexcept { return message_; }

 private:
  std::size_t position_;
  std::string message_;
};

/// A dense-matrix operation was asked for more qubits than its cap allows.
class OracleSizeError : public std::length_error {
 public:
  OracleSizeError(unsigned n_qubits, unsigned cap)
      : std::length_error(
            "dense oracle limited to " + std::to_string(cap) +
            " qubits, got " + std::to_string(n_qubits)),
        n_qubits_(n_qubits),
        cap_(cap) {}

  unsigned n_qubits() const noexcept { return n_qubits_; }
  unsigned cap() const noexcept { return cap_; }

 private:
  unsigned n_qubits_;
  unsigned cap_;
};

}  // namespace paulisynth
