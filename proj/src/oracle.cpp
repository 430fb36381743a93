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

#include "paulisynth/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>

#include "paulisynth/errors.hpp"

namespace paulisynth::oracle {
namespace {

using Eigen::Index;
constexpr Complex kI{0.0, 1.0};

void require_dense(unsigned n_qubits, unsigned cap = kMaxDenseQubits) {
  if (n_qubits > cap) throw OracleSizeError(n_qubits, cap);
}

Index bit_of(unsigned n_qubits, Qubit q) {
  return Index{1} << (n_qubits - 1 - q);
}

// Left-multiplies `u` by a 2x2 matrix acting on qubit q.
void apply_1q(UnitaryMatrix& u, unsigned n_qubits, Qubit q,
              const Eigen::Matrix2cd& m) {
  const Index mask = bit_of(n_qubits, q);
  for (Index r0 = 0; r0 < u.rows(); ++r0) {
    if (r0 & mask) continue;
    const Index r1 = r0 | mask;
    Eigen::RowVectorXcd row0 = u.row(r0);
    Eigen::RowVectorXcd row1 = u.row(r1);
    u.row(r0) = m(0, 0) * row0 + m(0, 1) * row1;
    u.row(r1) = m(1, 0) * row0 + m(1, 1) * row1;
  }
}

Eigen::Matrix2cd single_qubit_matrix(const Gate& g) {
  Eigen::Matrix2cd m;
  const double half = g.angle() / 2.0;
  switch (g.kind()) {
    case GateKind::H: {
      const double r = 1.0 / std::sqrt(2.0);
      m << r, r, r, -r;
      break;
    }
    case GateKind::S:
      m << 1.0, 0.0, 0.0, kI;
      break;
    case GateKind::Sdg:
      m << 1.0, 0.0, 0.0, -kI;
      break;
    case GateKind::RZ:
      m << std::exp(-kI * half), 0.0, 0.0, std::exp(kI * half);
      break;
    case GateKind::RX:
      m << std::cos(half), -kI * std::sin(half), -kI * std::sin(half),
          std::cos(half);
      break;
    default:
      throw std::logic_error("not a single-qubit gate");
  }
  return m;
}

void apply_gate(UnitaryMatrix& u, unsigned n_qubits, const Gate& g) {
  switch (g.kind()) {
    case GateKind::CX: {
      const Index control = bit_of(n_qubits, g.qubit(0));
      const Index target = bit_of(n_qubits, g.qubit(1));
      for (Index r = 0; r < u.rows(); ++r) {
        if ((r & control) && !(r & target)) u.row(r).swap(u.row(r | target));
      }
      break;
    }
    case GateKind::CZ: {
      const Index both = bit_of(n_qubits, g.qubit(0)) |
                         bit_of(n_qubits, g.qubit(1));
      for (Index r = 0; r < u.rows(); ++r) {
        if ((r & both) == both) u.row(r) *= -1.0;
      }
      break;
    }
    default:
      apply_1q(u, n_qubits, g.qubit(), single_qubit_matrix(g));
  }
}

unsigned qubits_for_dim(Index dim) {
  unsigned n = 0;
  while ((Index{1} << n) < dim) ++n;
  if ((Index{1} << n) != dim) {
    throw std::invalid_argument("matrix dimension " + std::to_string(dim) +
                                " is not a power of two");
  }
  return n;
}

}  // namespace

UnitaryMatrix pauli_matrix(const PauliString& p) {
  const unsigned n = p.size();
  require_dense(n);
  const Index dim = Index{1} << n;

  // P is a phased permutation: column c maps to row c ^ flips.
  Index flips = 0;
  for (Qubit q = 0; q < n; ++q) {
    if (p[q] == Pauli::X || p[q] == Pauli::Y) flips |= bit_of(n, q);
  }
  UnitaryMatrix m = UnitaryMatrix::Zero(dim, dim);
  for (Index c = 0; c < dim; ++c) {
    Complex value = 1.0;
    for (Qubit q = 0; q < n; ++q) {
      const bool one = (c & bit_of(n, q)) != 0;
      switch (p[q]) {
        case Pauli::Y:
          value *= one ? -kI : kI;
          break;
        case Pauli::Z:
          if (one) value = -value;
          break;
        default:
          break;
      }
    }
    m(c ^ flips, c) = value;
  }
  return m;
}

UnitaryMatrix exp_pauli_closed_form(const PauliString& p, double t) {
  const UnitaryMatrix pm = pauli_matrix(p);
  return std::cos(t) * UnitaryMatrix::Identity(pm.rows(), pm.cols()) -
         kI * std::sin(t) * pm;
}

UnitaryMatrix circuit_unitary(const QuantumCircuit& c) {
  const unsigned n = c.n_qubits();
  require_dense(n);
  const Index dim = Index{1} << n;
  UnitaryMatrix u = UnitaryMatrix::Identity(dim, dim);
  for (const Gate& g : c.gates()) apply_gate(u, n, g);
  if (c.global_phase() != 0.0) u *= std::exp(kI * c.global_phase());
  return u;
}

Eigen::MatrixXcd hamiltonian_matrix(const Hamiltonian& h) {
  const unsigned n = h.n_qubits();
  require_dense(n);
  const Index dim = Index{1} << n;
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
  for (const PauliTerm& term : h.terms()) {
    m += term.coefficient() * pauli_matrix(term.string());
  }
  return m;
}

UnitaryMatrix matrix_exponential(const Eigen::MatrixXcd& m, double t) {
  if (m.rows() != m.cols()) {
    throw std::invalid_argument("matrix_exponential needs a square matrix");
  }
  require_dense(qubits_for_dim(m.rows()), kMaxExponentialQubits);
  const double scale = std::max(1.0, m.norm());
  if ((m - m.adjoint()).norm() > 1e-10 * scale) {
    throw std::invalid_argument("matrix_exponential needs a Hermitian matrix");
  }

  const Index dim = m.rows();
  Eigen::MatrixXcd a = (-kI * t) * m;
  // Induced 1-norm bounds the spectral radius.
  const double norm = a.cwiseAbs().colwise().sum().maxCoeff();
  int squarings = 0;
  while (std::ldexp(norm, -squarings) > 0.5) ++squarings;
  a *= std::ldexp(1.0, -squarings);

  constexpr int kTaylorTerms = 30;
  UnitaryMatrix result = UnitaryMatrix::Identity(dim, dim);
  Eigen::MatrixXcd term = UnitaryMatrix::Identity(dim, dim);
  for (int k = 1; k <= kTaylorTerms; ++k) {
    term = (term * a) / static_cast<double>(k);
    result += term;
  }
  for (int s = 0; s < squarings; ++s) result = (result * result).eval();
  return result;
}

double phase_invariant_distance(const Eigen::MatrixXcd& a,
                                const Eigen::MatrixXcd& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw std::invalid_argument("phase_invariant_distance: dimension mismatch");
  }
  // The minimizing phase is arg tr(b^dagger a). Evaluating the residual
  // directly avoids the cancellation in ||a||^2 + ||b||^2 - 2|tr(b^dagger a)|.
  const Complex overlap = (b.conjugate().cwiseProduct(a)).sum();
  const Complex phase =
      std::abs(overlap) > 0.0 ? overlap / std::abs(overlap) : Complex{1.0};
  return (a - phase * b).norm();
}

double frobenius_distance(const Eigen::MatrixXcd& a,
                          const Eigen::MatrixXcd& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw std::invalid_argument("frobenius_distance: dimension mismatch");
  }
  return (a - b).norm();
}

double unitarity_error(const Eigen::MatrixXcd& u) {
  return (u.adjoint() * u -
          Eigen::MatrixXcd::Identity(u.cols(), u.cols()))
      .norm();
}

}  // namespace paulisynth::oracle
