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
#include <span>
#include <string_view>

#include "paulisynth/circuit.hpp"
#include "paulisynth/pauli.hpp"

namespace paulisynth {

/// How the parity ladder is seeded before basis changes are applied.
///   ZLadder - ladder in the Z basis; X via H, Y via Sdg/H ... H/S.
///   XLadder - ladder conjugated to the X basis on every support qubit, then
///             X->Z via H and X->Y via Sdg ... S.
///   Mixed   - Z ladder on Z qubits, X basis on X and Y qubits, then
///             X->Y via Sdg ... S.
/// All three realize the same unitary; only the gate sequences differ.
enum class SynthVariant : unsigned char { ZLadder, XLadder, Mixed };

std::string_view variant_name(SynthVariant v);
/// Accepts "z-ladder", "x-ladder" and "mixed".
std::optional<SynthVariant> parse_variant(std::string_view name);

struct EvolutionParams {
  EvolutionParams(double t, unsigned reps = 1);

  double t;
  unsigned reps;
};

/// CNOT ladder realizing exp(-i theta/2 Z_support). For support
/// q1 < q2 < ... < qk the gates are CX(qk, qk-1) ... CX(q2, q1), RZ(q1, theta),
/// then the CXs mirrored. Throws std::invalid_argument for an empty,
/// unsorted or out-of-range support.
QuantumCircuit synth_z_rotation(unsigned n_qubits,
                                std::span<const Qubit> support, double theta);

/// Circuit for exp(-i t w P) with w = term.coefficient(), P = term.string().
/// An all-identity string yields no gates and global phase -t w.
QuantumCircuit exp_pauli_term(const PauliTerm& term, double t,
                              SynthVariant variant = SynthVariant::ZLadder);

/// First-order product formula: reps repetitions of exp_pauli_term over the
/// terms in stored order, each with time t / reps. With `compact` the result
/// is passed through cancel_adjacent.
QuantumCircuit trotter_circuit(const Hamiltonian& h,
                               const EvolutionParams& params,
                               SynthVariant variant = SynthVariant::ZLadder,
                               bool compact = false);

}  // namespace paulisynth
