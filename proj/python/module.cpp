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

#include <pybind11/eigen.h>
#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "paulisynth/cli.hpp"
#include "paulisynth/errors.hpp"
#include "paulisynth/hamiltonian_parser.hpp"
#include "paulisynth/oracle.hpp"
#include "paulisynth/qasm.hpp"
#include "paulisynth/synthesis.hpp"

namespace py = pybind11;
using namespace paulisynth;

namespace {

template <class T>
std::string repr(const T& value) {
  std::ostringstream os;
  os << value;
  return os.str();
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Pauli-exponential circuit synthesis with a dense-matrix oracle";

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<OracleSizeError>(m, "OracleSizeError",
                                          PyExc_ValueError);

  py::enum_<Pauli>(m, "Pauli")
      .value("I", Pauli::I)
      .value("X", Pauli::X)
      .value("Y", Pauli::Y)
      .value("Z", Pauli::Z);

  py::class_<PauliString>(m, "PauliString")
      .def(py::init<std::vector<Pauli>>())
      .def_static("from_dense", &PauliString::from_dense, py::arg("label"))
      .def_static("identity", &PauliString::identity, py::arg("n_qubits"))
      .def("__len__", &PauliString::size)
      .def("__getitem__", &PauliString::operator[])
      .def("weight", &PauliString::weight)
      .def("support", &PauliString::support)
      .def("to_dense", &PauliString::to_dense)
      .def("__str__", &PauliString::to_dense)
      .def("__repr__",
           [](const PauliString& p) {
             return "PauliString('" + p.to_dense() + "')";
           })
      .def(py::self == py::self);

  py::class_<PauliTerm>(m, "PauliTerm")
      .def(py::init<double, PauliString>(), py::arg("coefficient"),
           py::arg("string"))
      .def(py::init([](double coefficient, const std::string& label) {
             return PauliTerm(coefficient, PauliString::from_dense(label));
           }),
           py::arg("coefficient"), py::arg("label"))
      .def_property_readonly("coefficient", &PauliTerm::coefficient)
      .def_property_readonly("string", &PauliTerm::string)
      .def(py::self == py::self);

  py::class_<Hamiltonian>(m, "Hamiltonian")
      .def(py::init<unsigned, std::vector<PauliTerm>>(), py::arg("n_qubits"),
           py::arg("terms"))
      .def_property_readonly("n_qubits", &Hamiltonian::n_qubits)
      .def_property_readonly("terms", &Hamiltonian::terms)
      .def("__len__", &Hamiltonian::size)
      .def("__str__", &format_hamiltonian)
      .def(py::self == py::self);

  m.def("parse_hamiltonian", &parse_hamiltonian, py::arg("text"),
        py::arg("n_qubits"));
  m.def("format_hamiltonian", &format_hamiltonian, py::arg("h"));

  py::enum_<GateKind>(m, "GateKind")
      .value("H", GateKind::H)
      .value("S", GateKind::S)
      .value("Sdg", GateKind::Sdg)
      .value("RZ", GateKind::RZ)
      .value("RX", GateKind::RX)
      .value("CX", GateKind::CX)
      .value("CZ", GateKind::CZ);

  py::class_<Gate>(m, "Gate")
      .def_static("h", &Gate::h)
      .def_static("s", &Gate::s)
      .def_static("sdg", &Gate::sdg)
      .def_static("rz", &Gate::rz)
      .def_static("rx", &Gate::rx)
      .def_static("cx", &Gate::cx, py::arg("control"), py::arg("target"))
      .def_static("cz", &Gate::cz)
      .def_property_readonly("kind", &Gate::kind)
      .def_property_readonly("qubits",
                             [](const Gate& g) {
                               return std::vector<Qubit>(g.qubits().begin(),
                                                         g.qubits().end());
                             })
      .def_property_readonly("angle", &Gate::angle)
      .def("inverse", &Gate::inverse)
      .def("__repr__", &repr<Gate>)
      .def(py::self == py::self);

  py::class_<QuantumCircuit>(m, "QuantumCircuit")
      .def(py::init<unsigned, std::vector<Gate>, double>(), py::arg("n_qubits"),
           py::arg("gates") = std::vector<Gate>{},
           py::arg("global_phase") = 0.0)
      .def_property_readonly("n_qubits", &QuantumCircuit::n_qubits)
      .def_property_readonly("gates", &QuantumCircuit::gates)
      .def_property_readonly("global_phase", &QuantumCircuit::global_phase)
      .def("__len__", &QuantumCircuit::size)
      .def("__repr__", &repr<QuantumCircuit>)
      .def(py::self == py::self);

  m.def("append", &append, py::arg("circuit"), py::arg("gate"));
  m.def("dagger", &dagger, py::arg("circuit"));
  m.def("cancel_adjacent", &cancel_adjacent, py::arg("circuit"));
  m.def(
      "gate_counts",
      [](const QuantumCircuit& c) {
        const GateCounts counts = gate_counts(c);
        py::dict out;
        for (GateKind kind : kAllGateKinds) {
          out[py::str(std::string(gate_name(kind)))] = counts[kind];
        }
        return out;
      },
      py::arg("circuit"));

  py::enum_<SynthVariant>(m, "SynthVariant")
      .value("z_ladder", SynthVariant::ZLadder)
      .value("x_ladder", SynthVariant::XLadder)
      .value("mixed", SynthVariant::Mixed);

  m.def(
      "synth_z_rotation",
      [](unsigned n, const std::vector<Qubit>& support, double theta) {
        return synth_z_rotation(n, support, theta);
      },
      py::arg("n_qubits"), py::arg("support"), py::arg("theta"));
  m.def("exp_pauli_term", &exp_pauli_term, py::arg("term"), py::arg("t"),
        py::arg("variant") = SynthVariant::ZLadder);
  m.def(
      "trotter_circuit",
      [](const Hamiltonian& h, double t, unsigned reps, SynthVariant variant,
         bool compact) {
        return trotter_circuit(h, EvolutionParams(t, reps), variant, compact);
      },
      py::arg("h"), py::arg("t"), py::arg("reps") = 1,
      py::arg("variant") = SynthVariant::ZLadder, py::arg("compact") = false);

  m.def(
      "emit_qasm",
      [](const QuantumCircuit& c) { return emit_qasm(c).text; },
      py::arg("circuit"));
  m.def("validate_qasm", &validate_qasm, py::arg("text"));

  m.def("pauli_matrix", &oracle::pauli_matrix, py::arg("p"));
  m.def("exp_pauli_closed_form", &oracle::exp_pauli_closed_form, py::arg("p"),
        py::arg("t"));
  m.def("circuit_unitary", &oracle::circuit_unitary, py::arg("circuit"));
  m.def("hamiltonian_matrix", &oracle::hamiltonian_matrix, py::arg("h"));
  m.def("matrix_exponential", &oracle::matrix_exponential, py::arg("m"),
        py::arg("t"));
  m.def("phase_invariant_distance", &oracle::phase_invariant_distance,
        py::arg("a"), py::arg("b"));

  m.def(
      "run_cli",
      [](const std::vector<std::string>& args) {
        std::ostringstream out;
        std::ostringstream err;
        const int code = run_cli(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"),
      "Runs the command-line tool in-process; returns (exit_code, stdout, "
      "stderr).");
}
