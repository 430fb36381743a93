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

#include <string>
#include <string_view>

#include "paulisynth/pauli.hpp"

namespace paulisynth {

// Weighted-sum Hamiltonian language (also the `.ham` file format):
//
//   expr   := ['-'] term (('+' | '-') term)*
//   term   := [coeff '*'] factor+ | coeff '*' 'Id'
//   factor := ('X' | 'Y' | 'Z') index
//
// coeff is a signed decimal literal with optional exponent, index is a
// 0-based decimal qubit number written directly after the operator letter.
// Whitespace (including line breaks) separates tokens; '#' comments run to
// the end of the line.

/// Throws ParseError on unknown tokens, malformed numbers, indices
/// >= n_qubits, a qubit repeated within one term, or empty input.
Hamiltonian parse_hamiltonian(std::string_view text, unsigned n_qubits);

/// Canonical text: `coeff*F i F j ...` per term joined by " + ", factors in
/// ascending qubit order, coefficients in shortest round-trip form.
/// parse_hamiltonian(format_hamiltonian(h), h.n_qubits()) == h.
std::string format_hamiltonian(const Hamiltonian& h);

/// Shortest decimal text that reads back as exactly `value`.
std::string format_coefficient(double value);

}  // namespace paulisynth
