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

#include <Eigen/Dense>
#include <complex>

#include "paulisynth/circuit.hpp"
#include "paulisynth/pauli.hpp"

namespace paulisynth::oracle {

// Dense reference matrices for verifying synthesized circuits. Basis-state
// index bit (n-1-q) holds qubit q, i.e. qubit 0 is the leftmost Kronecker
// factor.

using Complex = std::complex<double>;
using UnitaryMatrix = Eigen::MatrixXcd;

/// Cap on qubits for anything built as a dense 2^n x 2^n matrix.
inline constexpr unsigned kMaxDenseQubits = 12;
/// Tighter cap for the Taylor-series exponential.
inline constexpr unsigned kMaxExponentialQubits = 8;

UnitaryMatrix pauli_matrix(const PauliString& p);

/// cos(t) I - i sin(t) P, exact because P^2 = I.
UnitaryMatrix exp_pauli_closed_form(const PauliString& p, double t);

/// exp(i global_phase) times the product of gate matrices in order.
UnitaryMatrix circuit_unitary(const QuantumCircuit& c);

/// sum_k coefficient_k * pauli_matrix(string_k).
Eigen::MatrixXcd hamiltonian_matrix(const Hamiltonian& h);

/// exp(-i t m) for Hermitian m, by scaling and squaring a truncated Taylor
/// series. Throws std::invalid_argument when m is not Hermitian within
/// 1e-10 and OracleSizeError above kMaxExponentialQubits.
UnitaryMatrix matrix_exponential(const Eigen::MatrixXcd& m, double t);

/// min over phi of ||a - exp(i phi) b||_F.
double phase_invariant_distance(const Eigen::MatrixXcd& a,
                                const Eigen::MatrixXcd& b);

double frobenius_distance(const Eigen::MatrixXcd& a,
                          const Eigen::MatrixXcd& b);

/// ||U^dagger U - I||_F.
double unitarity_error(const Eigen::MatrixXcd& u);

}  // namespace paulisynth::oracle
