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

#include <catch_amalgamated.hpp>

#include <random>

#include "paulisynth/circuit.hpp"
#include "paulisynth/oracle.hpp"
#include "paulisynth/synthesis.hpp"
#include "reference.hpp"

using namespace paulisynth;

TEST_CASE("append has value semantics and checks bounds", "[circuit]") {
  const QuantumCircuit empty(2);
  const QuantumCircuit one = append(empty, Gate::h(0));
  CHECK(empty.empty());
  CHECK(one.gates() == std::vector<Gate>{Gate::h(0)});

  const QuantumCircuit two = append(one, Gate::cx(0, 1));
  CHECK(two.gates() == std::vector<Gate>{Gate::h(0), Gate::cx(0, 1)});
  CHECK(one.size() == 1);

  CHECK_THROWS_AS(append(one, Gate::cx(0, 5)), std::out_of_range);
  CHECK_THROWS_AS(append(one, Gate::rz(2, 0.1)), std::out_of_range);
}

TEST_CASE("gates reject degenerate arguments", "[circuit]") {
  CHECK_THROWS_AS(Gate::cx(1, 1), std::invalid_argument);
  CHECK_THROWS_AS(Gate::cz(0, 0), std::invalid_argument);
  CHECK_THROWS_AS(Gate::rz(0, std::nan("")), std::invalid_argument);
  CHECK_THROWS_AS(Gate::rx(0, INFINITY), std::invalid_argument);
  CHECK_THROWS_AS(QuantumCircuit(0), std::invalid_argument);
}

TEST_CASE("dagger reverses and inverts", "[circuit]") {
  CHECK(dagger(QuantumCircuit(1, {Gate::s(0)})).gates() ==
        std::vector<Gate>{Gate::sdg(0)});

  const QuantumCircuit c(2, {Gate::h(0), Gate::cx(0, 1), Gate::rz(1, 0.6)},
                         0.25);
  const QuantumCircuit d = dagger(c);
  CHECK(d.gates() ==
        std::vector<Gate>{Gate::rz(1, -0.6), Gate::cx(0, 1), Gate::h(0)});
  CHECK(d.global_phase() == -0.25);
}

TEST_CASE("dagger is an involution and gives the adjoint", "[circuit][property]") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 100; ++i) {
    const unsigned n = 1 + static_cast<unsigned>(rng() % 4);
    const QuantumCircuit c = reference::random_circuit(rng, n, rng() % 20);
    CHECK(dagger(dagger(c)) == c);
    const auto u = oracle::circuit_unitary(c);
    CHECK((oracle::circuit_unitary(dagger(c)) - u.adjoint()).norm() <= 1e-12);
  }
}

TEST_CASE("gate counts", "[circuit]") {
  const GateCounts empty = gate_counts(QuantumCircuit(3));
  for (GateKind kind : kAllGateKinds) CHECK(empty[kind] == 0);
  CHECK(empty.total() == 0);

  const GateCounts zz = gate_counts(exp_pauli_term(
      PauliTerm(1.0, PauliString::from_dense("ZZ")), 0.3));
  CHECK(zz[GateKind::CX] == 2);
  CHECK(zz[GateKind::RZ] == 1);
  CHECK(zz.total() == 3);
}

TEST_CASE("adjacent inverse pairs cancel", "[circuit][peephole]") {
  CHECK(cancel_adjacent(QuantumCircuit(1, {Gate::h(0), Gate::h(0)})).empty());

  // The H pair cancels across a gate on a disjoint qubit.
  const QuantumCircuit across(2, {Gate::h(0), Gate::s(1), Gate::h(0)});
  CHECK(cancel_adjacent(across).gates() == std::vector<Gate>{Gate::s(1)});

  // A gate touching the same qubit blocks the pair.
  const QuantumCircuit blocked(2, {Gate::h(0), Gate::cx(0, 1), Gate::h(0)});
  CHECK(cancel_adjacent(blocked) == blocked);

  // Nested pairs collapse in one call.
  const QuantumCircuit nested(
      2, {Gate::h(0), Gate::s(0), Gate::cx(0, 1), Gate::cx(0, 1),
          Gate::sdg(0), Gate::h(0)});
  CHECK(cancel_adjacent(nested).empty());

  // CX is directional; CZ is symmetric.
  const QuantumCircuit flipped(2, {Gate::cx(0, 1), Gate::cx(1, 0)});
  CHECK(cancel_adjacent(flipped) == flipped);
  CHECK(cancel_adjacent(QuantumCircuit(2, {Gate::cz(0, 1), Gate::cz(1, 0)}))
            .empty());

  // S S is not an inverse pair.
  const QuantumCircuit ss(1, {Gate::s(0), Gate::s(0)});
  CHECK(cancel_adjacent(ss) == ss);
}

TEST_CASE("rotations on one qubit merge", "[circuit][peephole]") {
  const QuantumCircuit c(2, {Gate::rz(0, 0.25), Gate::rx(1, 0.5),
                             Gate::rz(0, 0.5), Gate::rx(1, -0.5)},
                         0.1);
  const QuantumCircuit merged = cancel_adjacent(c);
  CHECK(merged.gates() == std::vector<Gate>{Gate::rz(0, 0.75)});
  CHECK(merged.global_phase() == 0.1);

  // RZ and RX do not merge with each other.
  const QuantumCircuit mixed(1, {Gate::rz(0, 0.25), Gate::rx(0, 0.25)});
  CHECK(cancel_adjacent(mixed) == mixed);

  // Only an exact zero removes the merged gate.
  const QuantumCircuit near(1, {Gate::rz(0, 0.1 + 0.2), Gate::rz(0, -0.3)});
  CHECK(cancel_adjacent(near).size() == 1);
}

TEST_CASE("cancel_adjacent preserves the unitary and never grows",
          "[circuit][peephole][property]") {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 300; ++i) {
    const unsigned n = 1 + static_cast<unsigned>(rng() % 3);
    const QuantumCircuit c = reference::random_circuit(rng, n, rng() % 30);
    // Splice in the circuit's inverse to guarantee plenty of cancellations.
    QuantumCircuit doubled = c;
    if (i % 2) doubled.add(dagger(reference::random_circuit(rng, n, 4)));
    const QuantumCircuit out = cancel_adjacent(doubled);
    CHECK(out.size() <= doubled.size());
    CHECK(oracle::frobenius_distance(oracle::circuit_unitary(out),
                                     oracle::circuit_unitary(doubled)) <=
          1e-12);
    CHECK(cancel_adjacent(out) == out);
  }

  QuantumCircuit round_trip = reference::random_circuit(rng, 3, 25);
  round_trip.add(dagger(round_trip));
  const QuantumCircuit reduced = cancel_adjacent(round_trip);
  CHECK(reduced.empty());
  CHECK(reduced.global_phase() == 0.0);
}
