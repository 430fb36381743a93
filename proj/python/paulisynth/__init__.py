"""Quantum circuits for exponentials of Pauli strings and Trotter products."""

from ._core import (
    Gate,
    GateKind,
    Hamiltonian,
    ParseError,
    Pauli,
    PauliString,
    PauliTerm,
    QuantumCircuit,
    SynthVariant,
    append,
    cancel_adjacent,
    circuit_unitary,
    dagger,
    emit_qasm,
    exp_pauli_closed_form,
    exp_pauli_term,
    format_hamiltonian,
    gate_counts,
    hamiltonian_matrix,
    matrix_exponential,
    parse_hamiltonian,
    pauli_matrix,
    phase_invariant_distance,
    run_cli,
    synth_z_rotation,
    trotter_circuit,
    validate_qasm,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
