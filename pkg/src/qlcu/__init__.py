"""Circuits for linear combinations of unitaries over finite 2-groups.

A target ``A = sum_g alpha_g D(g)`` over a (possibly projective) unitary
representation ``D`` of a group of order ``2**n`` is realized with ``n``
ancillas: Hadamards, a controlled case operator, the group circulant of
``alpha``, the inverse case operator, Hadamards. Everything is checked by
exact dense simulation.
"""

from .catalog import (
    DemoBundle,
    cyclic_power_rep,
    fractional_coefficients,
    fractional_demo,
    fractional_matrix,
    hartley_demo,
    hartley_matrix,
    kitaev_demo,
    pauli_decompose,
    pauli_representation,
    teleportation_demo,
)
from .circuit import (
    Block,
    Circuit,
    Cnot,
    ControlledBlock,
    CostReport,
    Hadamard,
    SingleQubit,
    compose,
    cost_report,
    inverse,
    parse,
    qft_circuit,
    serialize,
)
from .circulant import (
    CoefficientVector,
    check_key_lemma,
    group_circulant,
    projective_group_circulant,
    solve_coefficients,
    unitarize_coefficients,
)
from .errors import (
    MissingCostError,
    NonAbelianError,
    NonUnitaryCirculantError,
    NonUnitaryTargetError,
    NotInSpanError,
    OrderError,
    ParseError,
    PhaseRecoveryError,
    QlcuError,
    SizeCapError,
)
from .groups import (
    FactorSet,
    FiniteTwoGroup,
    Representation,
    Transversal,
    address_index,
    index_to_address,
    induced_factor_set,
    make_cyclic_group,
    make_direct_product,
    make_elementary_abelian,
    validate_factor_set,
    validate_representation,
)
from .linalg import dft_matrix, frobenius_coefficient, is_unitary, kron
from .simulator import StateVector, VerificationReport, apply_gate, circuit_unitary, trace_states, verify_realizes
from .synth import (
    case_operator_circuit,
    fourier_circulant_circuit,
    kitaev_circulant_identity,
    lcu_circuit,
    projective_lcu_circuit,
)

__version__ = "0.1.0"

__all__ = [
    "dft_matrix",
    "frobenius_coefficient",
    "is_unitary",
    "kron",
    "StateVector",
    "VerificationReport",
    "apply_gate",
    "circuit_unitary",
    "trace_states",
    "verify_realizes",
    "DemoBundle",
    "cyclic_power_rep",
    "fractional_coefficients",
    "fractional_demo",
    "fractional_matrix",
    "hartley_demo",
    "hartley_matrix",
    "kitaev_demo",
    "pauli_decompose",
    "pauli_representation",
    "teleportation_demo",
    "Block",
    "Circuit",
    "Cnot",
    "ControlledBlock",
    "CostReport",
    "Hadamard",
    "SingleQubit",
    "compose",
    "cost_report",
    "inverse",
    "parse",
    "qft_circuit",
    "serialize",
    "CoefficientVector",
    "check_key_lemma",
    "group_circulant",
    "projective_group_circulant",
    "solve_coefficients",
    "unitarize_coefficients",
    "MissingCostError",
    "NonAbelianError",
    "NonUnitaryCirculantError",
    "NonUnitaryTargetError",
    "NotInSpanError",
    "OrderError",
    "ParseError",
    "PhaseRecoveryError",
    "QlcuError",
    "SizeCapError",
    "FactorSet",
    "FiniteTwoGroup",
    "Representation",
    "Transversal",
    "address_index",
    "index_to_address",
    "induced_factor_set",
    "make_cyclic_group",
    "make_direct_product",
    "make_elementary_abelian",
    "validate_factor_set",
    "validate_representation",
    "case_operator_circuit",
    "fourier_circulant_circuit",
    "kitaev_circulant_identity",
    "lcu_circuit",
    "projective_lcu_circuit",
]
