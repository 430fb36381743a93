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

#include "paulisynth/synthesis.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

namespace paulisynth {

std::string_view variant_name(SynthVariant v) {
  switch (v) {
    case SynthVariant::ZLadder:
      return "z-ladder";
    case SynthVariant::XLadder:
      return "x-ladder";
    case SynthVariant::Mixed:
      return "mixed";
  }
  return "?";
}

std::optional<SynthVariant> parse_variant(std::string_view name) {
  if (name == "z-ladder") return SynthVariant::ZLadder;
  if (name == "x-ladder") return SynthVariant::XLadder;
  if (name == "mixed") return SynthVariant::Mixed;
  return std::nullopt;
}

EvolutionParams::EvolutionParams(double t_, unsigned reps_)
    : t(t_), reps(reps_) {
  if (!std::isfinite(t)) throw std::invalid_argument("t must be finite");
  if (reps == 0) throw std::invalid_argument("reps must be at least 1");
}

QuantumCircuit synth_z_rotation(unsigned n_qubits,
                                std::span<const Qubit> support, double theta) {
  if (support.empty()) {
    throw std::invalid_argument("synth_z_rotation needs a non-empty support");
  }
  for (std::size_t i = 0; i < support.size(); ++i) {
    if (support[i] >= n_qubits) {
      throw std::invalid_argument("support qubit " +
                                  std::to_string(support[i]) +
                                  " out of range");
    }
    if (i > 0 && support[i] <= support[i - 1]) {
      throw std::invalid_argument("support must be strictly ascending");
    }
  }

  QuantumCircuit c(n_qubits);
  for (std::size_t i = support.size() - 1; i > 0; --i) {
    c.add(Gate::cx(support[i], support[i - 1]));
  }
  c.add(Gate::rz(support.front(), theta));
  for (std::size_t i = 1; i < support.size(); ++i) {
    c.add(Gate::cx(support[i], support[i - 1]));
  }
  return c;
}

namespace {

// Basis changes around the ladder. `before` gates act first, `after` gates
// act last; each wrap added later encloses the earlier ones.
struct Wraps {
  std::vector<Gate> before;
  std::vector<Gate> after;
};

// Support qubits are walked in descending order so that the ascending
// operator-product listing (S_k H_k ... for k ascending) reads left to right
// once reversed into application order.
template <class Pred, class Fn>
void for_support_desc(const PauliString& p, const std::vector<Qubit>& support,
                      Pred pred, Fn fn) {
  for (auto it = support.rbegin(); it != support.rend(); ++it) {
    if (pred(p[*it])) fn(*it);
  }
}

Wraps z_ladder_wraps(const PauliString& p, const std::vector<Qubit>& support) {
  Wraps w;
  // Per qubit: X -> H . Q . H, Y -> S . H . Q . H . Sdg.
  for (auto it = support.rbegin(); it != support.rend(); ++it) {
    const Qubit q = *it;
    if (p[q] == Pauli::X) {
      w.before.push_back(Gate::h(q));
    } else if (p[q] == Pauli::Y) {
      w.before.push_back(Gate::sdg(q));
      w.before.push_back(Gate::h(q));
    }
  }
  for (auto it = support.rbegin(); it != support.rend(); ++it) {
    const Qubit q = *it;
    if (p[q] == Pauli::X) {
      w.after.push_back(Gate::h(q));
    } else if (p[q] == Pauli::Y) {
      w.after.push_back(Gate::h(q));
      w.after.push_back(Gate::s(q));
    }
  }
  return w;
}

// Encloses the current wraps in one more layer: `first(q)` acts before
// everything so far and `last(q)` after, for each qubit selected by `pred`.
template <class Pred>
void layer(Wraps& w, const PauliString& p, const std::vector<Qubit>& support,
           Pred pred, Gate (*first)(Qubit), Gate (*last)(Qubit)) {
  std::vector<Gate> before;
  std::vector<Gate> after;
  for_support_desc(p, support, pred, [&](Qubit q) {
    before.push_back(first(q));
    after.push_back(last(q));
  });
  w.before.insert(w.before.begin(), before.begin(), before.end());
  w.after.insert(w.after.end(), after.begin(), after.end());
}

bool is_x_or_y(Pauli op) { return op == Pauli::X || op == Pauli::Y; }
bool is_y(Pauli op) { return op == Pauli::Y; }
bool is_z(Pauli op) { return op == Pauli::Z; }
bool is_any(Pauli op) { return op != Pauli::I; }

Wraps x_ladder_wraps(const PauliString& p, const std::vector<Qubit>& support) {
  Wraps w;
  // exp(-i t X...X): every support qubit rotated into the X basis.
  layer(w, p, support, is_any, Gate::h, Gate::h);
  // X -> Z on Z qubits.
  layer(w, p, support, is_z, Gate::h, Gate::h);
  // X -> Y on Y qubits: Y = S X Sdg.
  layer(w, p, support, is_y, Gate::sdg, Gate::s);
  return w;
}

Wraps mixed_wraps(const PauliString& p, const std::vector<Qubit>& support) {
  Wraps w;
  layer(w, p, support, is_x_or_y, Gate::h, Gate::h);
  layer(w, p, support, is_y, Gate::sdg, Gate::s);
  return w;
}

}  // namespace

QuantumCircuit exp_pauli_term(const PauliTerm& term, double t,
                              SynthVariant variant) {
  const PauliString& p = term.string();
  const unsigned n = p.size();
  // t * w is formed once so that (w P, t) and (P, w t) give identical gates.
  const double scaled_time = t * term.coefficient();

  const std::vector<Qubit> support = p.support();
  if (support.empty()) return QuantumCircuit(n, -scaled_time);

  Wraps wraps;
  switch (variant) {
    case SynthVariant::ZLadder:
      wraps = z_ladder_wraps(p, support);
      break;
    case SynthVariant::XLadder:
      wraps = x_ladder_wraps(p, support);
      break;
    case SynthVariant::Mixed:
      wraps = mixed_wraps(p, support);
      break;
  }

  QuantumCircuit c(n);
  for (const Gate& g : wraps.before) c.add(g);
  c.add(synth_z_rotation(n, support, 2.0 * scaled_time));
  for (const Gate& g : wraps.after) c.add(g);
  return c;
}

QuantumCircuit trotter_circuit(const Hamiltonian& h,
                               const EvolutionParams& params,
                               SynthVariant variant, bool compact) {
  const double slice = params.t / static_cast<double>(params.reps);
  QuantumCircuit c(h.n_qubits());
  for (unsigned r = 0; r < params.reps; ++r) {
    for (const PauliTerm& term : h.terms()) {
      c.add(exp_pauli_term(term, slice, variant));
    }
  }
  return compact ? cancel_adjacent(c) : c;
}

}  // namespace paulisynth
