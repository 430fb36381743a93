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
#include <initializer_list>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace paulisynth {

using Qubit = unsigned;

enum class Pauli : unsigned char { I, X, Y, Z };

char to_char(Pauli p);

/// Dense tensor product of single-qubit Paulis. Entry k acts on qubit k;
/// the length is fixed at construction and is at least one.
class PauliString {
 public:
  explicit PauliString(std::vector<Pauli> ops);
  PauliString(std::initializer_list<Pauli> ops);

  /// All-identity string on `n_qubits` qubits.
  static PauliString identity(unsigned n_qubits);

  /// Parses a dense label such as "IXZY". Throws ParseError naming the
  /// first character outside {I, X, Y, Z}, or position 0 for an empty label.
  static PauliString from_dense(std::string_view label);

  unsigned size() const noexcept { return static_cast<unsigned>(ops_.size()); }
  Pauli operator[](Qubit q) const { return ops_.at(q); }
  const std::vector<Pauli>& ops() const noexcept { return ops_; }

  unsigned weight() const noexcept;
  /// Ascending indices of the non-identity entries.
  std::vector<Qubit> support() const;

  std::string to_dense() const;

  friend bool operator==(const PauliString&, const PauliString&) = default;

 private:
  std::vector<Pauli> ops_;
};

std::ostream& operator<<(std::ostream& os, const PauliString& p);

inline unsigned weight(const PauliString& p) { return p.weight(); }
inline std::vector<Qubit> support(const PauliString& p) { return p.support(); }

/// A Pauli string with a finite real weight.
class PauliTerm {
 public:
  PauliTerm(double coefficient, PauliString string);

  double coefficient() const noexcept { return coefficient_; }
  const PauliString& string() const noexcept { return string_; }
  unsigned n_qubits() const noexcept { return string_.size(); }

  friend bool operator==(const PauliTerm&, const PauliTerm&) = default;

 private:
  double coefficient_;
  PauliString string_;
};

/// Ordered sum of Pauli terms on a common register. Term order is kept
/// exactly as given; product formulas depend on it.
class Hamiltonian {
 public:
  explicit Hamiltonian(unsigned n_qubits);
  Hamiltonian(unsigned n_qubits, std::vector<PauliTerm> terms);

  unsigned n_qubits() const noexcept { return n_qubits_; }
  const std::vector<PauliTerm>& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool empty() const noexcept { return terms_.empty(); }

  /// Returns a copy with `term` appended.
  Hamiltonian with_term(PauliTerm term) const;

  friend bool operator==(const Hamiltonian&, const Hamiltonian&) = default;

 private:
  unsigned n_qubits_;
  std::vector<PauliTerm> terms_;
};

}  // namespace paulisynth
