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

#include <array>
#include <cstddef>
#include <ostream>
#include <span>
#include <string_view>
#include <vector>

#include "paulisynth/pauli.hpp"

namespace paulisynth {

enum class GateKind : unsigned char { H, S, Sdg, RZ, RX, CX, CZ };

inline constexpr std::array<GateKind, 7> kAllGateKinds = {
    GateKind::H,  GateKind::S,  GateKind::Sdg, GateKind::RZ,
    GateKind::RX, GateKind::CX, GateKind::CZ};

/// Lower-case OpenQASM mnemonic ("h", "sdg", "cx", ...).
std::string_view gate_name(GateKind kind);

inline constexpr bool is_two_qubit(GateKind kind) {
  return kind == GateKind::CX || kind == GateKind::CZ;
}
inline constexpr bool is_rotation(GateKind kind) {
  return kind == GateKind::RZ || kind == GateKind::RX;
}

// Rotation convention:
//   RZ(theta) = diag(exp(-i theta/2), exp(i theta/2))
//   RX(theta) = [[cos theta/2, -i sin theta/2], [-i sin theta/2, cos theta/2]]
// so exp(-i t Z) = RZ(2t). CX(a, b) has control a and target b.
class Gate {
 public:
  static Gate h(Qubit q) { return Gate(GateKind::H, q); }
  static Gate s(Qubit q) { return Gate(GateKind::S, q); }
  static Gate sdg(Qubit q) { return Gate(GateKind::Sdg, q); }
  static Gate rz(Qubit q, double angle) { return Gate(GateKind::RZ, q, angle); }
  static Gate rx(Qubit q, double angle) { return Gate(GateKind::RX, q, angle); }
  static Gate cx(Qubit control, Qubit target) {
    return Gate(GateKind::CX, control, target);
  }
  static Gate cz(Qubit a, Qubit b) { return Gate(GateKind::CZ, a, b); }

  GateKind kind() const noexcept { return kind_; }
  std::size_t arity() const noexcept { return is_two_qubit(kind_) ? 2 : 1; }
  std::span<const Qubit> qubits() const noexcept {
    return {qubits_.data(), arity()};
  }
  Qubit qubit(std::size_t i = 0) const { return qubits_.at(i); }
  /// Rotation angle in radians; zero for non-rotation gates.
  double angle() const noexcept { return angle_; }

  /// Inverse gate: S <-> Sdg, rotations negate, the rest are self-inverse.
  Gate inverse() const;

  friend bool operator==(const Gate&, const Gate&) = default;

 private:
  Gate(GateKind kind, Qubit q, double angle = 0.0);
  Gate(GateKind kind, Qubit a, Qubit b);

  GateKind kind_;
  std::array<Qubit, 2> qubits_{};
  double angle_ = 0.0;
};

std::ostream& operator<<(std::ostream& os, const Gate& g);

/// Ordered gate list over `n_qubits` qubits; gates[0] acts on the state
/// first. The represented unitary is exp(i global_phase) * G_last ... G_0.
class QuantumCircuit {
 public:
  explicit QuantumCircuit(unsigned n_qubits, double global_phase = 0.0);
  QuantumCircuit(unsigned n_qubits, std::vector<Gate> gates,
                 double global_phase = 0.0);

  unsigned n_qubits() const noexcept { return n_qubits_; }
  const std::vector<Gate>& gates() const noexcept { return gates_; }
  std::size_t size() const noexcept { return gates_.size(); }
  bool empty() const noexcept { return gates_.empty(); }
  double global_phase() const noexcept { return global_phase_; }

  /// In-place append; throws std::out_of_range if `g` leaves the register.
  QuantumCircuit& add(const Gate& g);
  /// Appends every gate of `other` and accumulates its phase.
  QuantumCircuit& add(const QuantumCircuit& other);
  QuantumCircuit& add_phase(double phase);

  friend bool operator==(const QuantumCircuit&,
                         const QuantumCircuit&) = default;

 private:
  void check(const Gate& g) const;

  unsigned n_qubits_;
  std::vector<Gate> gates_;
  double global_phase_;
};

std::ostream& operator<<(std::ostream& os, const QuantumCircuit& c);

/// Copy of `c` with `g` appended.
QuantumCircuit append(const QuantumCircuit& c, const Gate& g);

/// Gates reversed and inverted, phase negated: the conjugate transpose.
QuantumCircuit dagger(const QuantumCircuit& c);

class GateCounts {
 public:
  std::size_t operator[](GateKind kind) const {
    return counts_[static_cast<std::size_t>(kind)];
  }
  std::size_t& operator[](GateKind kind) {
    return counts_[static_cast<std::size_t>(kind)];
  }
  std::size_t total() const noexcept;

  friend bool operator==(const GateCounts&, const GateCounts&) = default;

 private:
  std::array<std::size_t, kAllGateKinds.size()> counts_{};
};

GateCounts gate_counts(const QuantumCircuit& c);

/// Peephole pass run to a fixed point. Removes adjacent inverse pairs
/// (H H, S Sdg, Sdg S, CX CX, CZ CZ) on the same qubits and merges adjacent
/// same-axis rotations on one qubit, dropping the result when the summed
/// angle is exactly 0.0. Two gates are adjacent when no gate between them
/// touches any of their qubits.
QuantumCircuit cancel_adjacent(const QuantumCircuit& c);

}  // namespace paulisynth
