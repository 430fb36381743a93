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

#include "paulisynth/circuit.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>

namespace paulisynth {

std::string_view gate_name(GateKind kind) {
  switch (kind) {
    case GateKind::H:
      return "h";
    case GateKind::S:
      return "s";
    case GateKind::Sdg:
      return "sdg";
    case GateKind::RZ:
      return "rz";
    case GateKind::RX:
      return "rx";
    case GateKind::CX:
      return "cx";
    case GateKind::CZ:
      return "cz";
  }
  return "?";
}

Gate::Gate(GateKind kind, Qubit q, double angle)
    : kind_(kind), qubits_{q, q}, angle_(angle) {
  if (!std::isfinite(angle_)) {
    throw std::invalid_argument("gate angle must be finite");
  }
}

Gate::Gate(GateKind kind, Qubit a, Qubit b) : kind_(kind), qubits_{a, b} {
  if (a == b) {
    throw std::invalid_argument("two-qubit gate needs distinct qubits, got " +
                                std::to_string(a) + " twice");
  }
}

Gate Gate::inverse() const {
  switch (kind_) {
    case GateKind::S:
      return sdg(qubits_[0]);
    case GateKind::Sdg:
      return s(qubits_[0]);
    case GateKind::RZ:
      return rz(qubits_[0], -angle_);
    case GateKind::RX:
      return rx(qubits_[0], -angle_);
    default:
      return *this;
  }
}

std::ostream& operator<<(std::ostream& os, const Gate& g) {
  os << gate_name(g.kind());
  if (is_rotation(g.kind())) os << '(' << g.angle() << ')';
  os << ' ' << g.qubit(0);
  if (g.arity() == 2) os << ',' << g.qubit(1);
  return os;
}

QuantumCircuit::QuantumCircuit(unsigned n_qubits, double global_phase)
    : n_qubits_(n_qubits), global_phase_(global_phase) {
  if (n_qubits_ == 0) {
    throw std::invalid_argument("circuit needs at least one qubit");
  }
  if (!std::isfinite(global_phase_)) {
    throw std::invalid_argument("global phase must be finite");
  }
}

QuantumCircuit::QuantumCircuit(unsigned n_qubits, std::vector<Gate> gates,
                               double global_phase)
    : QuantumCircuit(n_qubits, global_phase) {
  for (const Gate& g : gates) check(g);
  gates_ = std::move(gates);
}

void QuantumCircuit::check(const Gate& g) const {
  for (Qubit q : g.qubits()) {
    if (q >= n_qubits_) {
      throw std::out_of_range("gate qubit " + std::to_string(q) +
                              " outside a " + std::to_string(n_qubits_) +
                              "-qubit circuit");
    }
  }
}

QuantumCircuit& QuantumCircuit::add(const Gate& g) {
  check(g);
  gates_.push_back(g);
  return *this;
}

QuantumCircuit& QuantumCircuit::add(const QuantumCircuit& other) {
  if (other.n_qubits_ > n_qubits_) {
    throw std::out_of_range("cannot append a wider circuit");
  }
  gates_.insert(gates_.end(), other.gates_.begin(), other.gates_.end());
  global_phase_ += other.global_phase_;
  return *this;
}

QuantumCircuit& QuantumCircuit::add_phase(double phase) {
  global_phase_ += phase;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const QuantumCircuit& c) {
  os << "circuit(" << c.n_qubits() << " qubits, phase " << c.global_phase()
     << ")[";
  bool first = true;
  for (const Gate& g : c.gates()) {
    if (!first) os << "; ";
    first = false;
    os << g;
  }
  return os << ']';
}

QuantumCircuit append(const QuantumCircuit& c, const Gate& g) {
  QuantumCircuit out = c;
  out.add(g);
  return out;
}

QuantumCircuit dagger(const QuantumCircuit& c) {
  std::vector<Gate> gates;
  gates.reserve(c.size());
  for (auto it = c.gates().rbegin(); it != c.gates().rend(); ++it) {
    gates.push_back(it->inverse());
  }
  return QuantumCircuit(c.n_qubits(), std::move(gates), -c.global_phase());
}

std::size_t GateCounts::total() const noexcept {
  return std::accumulate(counts_.begin(), counts_.end(), std::size_t{0});
}

GateCounts gate_counts(const QuantumCircuit& c) {
  GateCounts counts;
  for (const Gate& g : c.gates()) ++counts[g.kind()];
  return counts;
}

namespace {

bool same_qubits(const Gate& a, const Gate& b) {
  if (a.arity() != b.arity()) return false;
  if (a.qubit(0) == b.qubit(0) && a.qubit(1) == b.qubit(1)) return true;
  // CZ is symmetric in its qubits.
  return a.kind() == GateKind::CZ && b.kind() == GateKind::CZ &&
         a.qubit(0) == b.qubit(1) && a.qubit(1) == b.qubit(0);
}

bool cancels(GateKind a, GateKind b) {
  switch (a) {
    case GateKind::H:
    case GateKind::CX:
    case GateKind::CZ:
      return b == a;
    case GateKind::S:
      return b == GateKind::Sdg;
    case GateKind::Sdg:
      return b == GateKind::S;
    default:
      return false;
  }
}

// One left-to-right sweep. Each qubit keeps a stack of the live output
// gates touching it, so the top is the nearest earlier gate on that wire.
std::vector<Gate> sweep(const QuantumCircuit& c, bool& changed) {
  std::vector<std::optional<Gate>> out;
  out.reserve(c.size());
  std::vector<std::vector<std::size_t>> wire(c.n_qubits());

  auto pop = [&](std::size_t j) {
    for (Qubit q : out[j]->qubits()) wire[q].pop_back();
    out[j].reset();
  };

  for (const Gate& g : c.gates()) {
    std::optional<std::size_t> neighbour;
    bool shared = true;
    for (Qubit q : g.qubits()) {
      if (wire[q].empty()) {
        shared = false;
        break;
      }
      if (neighbour && *neighbour != wire[q].back()) {
        shared = false;
        break;
      }
      neighbour = wire[q].back();
    }

    if (shared && neighbour && same_qubits(*out[*neighbour], g)) {
      const Gate& prev = *out[*neighbour];
      if (cancels(prev.kind(), g.kind())) {
        pop(*neighbour);
        changed = true;
        continue;
      }
      if (is_rotation(g.kind()) && prev.kind() == g.kind()) {
        const double merged = prev.angle() + g.angle();
        changed = true;
        if (merged == 0.0) {
          pop(*neighbour);
        } else {
          out[*neighbour] = g.kind() == GateKind::RZ
                                ? Gate::rz(g.qubit(), merged)
                                : Gate::rx(g.qubit(), merged);
        }
        continue;
      }
    }

    for (Qubit q : g.qubits()) wire[q].push_back(out.size());
    out.emplace_back(g);
  }

  std::vector<Gate> gates;
  gates.reserve(out.size());
  for (auto& g : out) {
    if (g) gates.push_back(*g);
  }
  return gates;
}

}  // namespace

QuantumCircuit cancel_adjacent(const QuantumCircuit& c) {
  QuantumCircuit current = c;
  for (;;) {
    bool changed = false;
    std::vector<Gate> gates = sweep(current, changed);
    if (!changed) return current;
    current = QuantumCircuit(c.n_qubits(), std::move(gates), c.global_phase());
  }
}

}  // namespace paulisynth
