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

#include "paulisynth/pauli.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "paulisynth/errors.hpp"

namespace paulisynth {

char to_char(Pauli p) {
  switch (p) {
    case Pauli::I:
      return 'I';
    case Pauli::X:
      return 'X';
    case Pauli::Y:
      return 'Y';
    case Pauli::Z:
      return 'Z';
  }
  return '?';
}

PauliString::PauliString(std::vector<Pauli> ops) : ops_(std::move(ops)) {
  if (ops_.empty()) {
    throw std::invalid_argument("PauliString needs at least one qubit");
  }
}

PauliString::PauliString(std::initializer_list<Pauli> ops)
    : PauliString(std::vector<Pauli>(ops)) {}

PauliString PauliString::identity(unsigned n_qubits) {
  return PauliString(std::vector<Pauli>(n_qubits, Pauli::I));
}

PauliString PauliString::from_dense(std::string_view label) {
  if (label.empty()) throw ParseError(0, "empty Pauli label");
  std::vector<Pauli> ops;
  ops.reserve(label.size());
  for (std::size_t i = 0; i < label.size(); ++i) {
    switch (label[i]) {
      case 'I':
        ops.push_back(Pauli::I);
        break;
      case 'X':
        ops.push_back(Pauli::X);
        break;
      case 'Y':
        ops.push_back(Pauli::Y);
        break;
      case 'Z':
        ops.push_back(Pauli::Z);
        break;
      default:
        throw ParseError(
            i, std::string("invalid Pauli character '") + label[i] + "'");
    }
  }
  return PauliString(std::move(ops));
}

unsigned PauliString::weight() const noexcept {
  return static_cast<unsigned>(
      std::count_if(ops_.begin(), ops_.end(), [](Pauli p) {
        return p != Pauli::I;
      }));
}

std::vector<Qubit> PauliString::support() const {
  std::vector<Qubit> out;
  for (Qubit q = 0; q < size(); ++q) {
    if (ops_[q] != Pauli::I) out.push_back(q);
  }
  return out;
}

std::string PauliString::to_dense() const {
  std::string s;
  s.reserve(ops_.size());
  for (Pauli p : ops_) s.push_back(to_char(p));
  return s;
}

std::ostream& operator<<(std::ostream& os, const PauliString& p) {
  return os << p.to_dense();
}

PauliTerm::PauliTerm(double coefficient, PauliString string)
    : coefficient_(coefficient), string_(std::move(string)) {
  if (!std::isfinite(coefficient_)) {
    throw std::invalid_argument("Pauli term coefficient must be finite");
  }
}

Hamiltonian::Hamiltonian(unsigned n_qubits) : n_qubits_(n_qubits) {
  if (n_qubits_ == 0) {
    throw std::invalid_argument("Hamiltonian needs at least one qubit");
  }
}

Hamiltonian::Hamiltonian(unsigned n_qubits, std::vector<PauliTerm> terms)
    : Hamiltonian(n_qubits) {
  for (const PauliTerm& term : terms) {
    if (term.n_qubits() != n_qubits_) {
      throw std::invalid_argument(
          "term " + term.string().to_dense() + " does not act on " +
          std::to_string(n_qubits_) + " qubits");
    }
  }
  terms_ = std::move(terms);
}

Hamiltonian Hamiltonian::with_term(PauliTerm term) const {
  std::vector<PauliTerm> terms = terms_;
  terms.push_back(std::move(term));
  return Hamiltonian(n_qubits_, std::move(terms));
}

}  // namespace paulisynth
