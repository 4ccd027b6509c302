"""Worked examples: Hartley, fractional Fourier, teleportation, Kitaev identity.

Each ``*_demo`` returns a :class:`DemoBundle` holding the synthesized circuit,
the reference matrix and a set of named numeric checks.
"""

from dataclasses import dataclass, field

import numpy as np

from .circuit import Block, Circuit, Cnot, ControlledBlock, Hadamard, SingleQubit, serialize
from .circulant import CoefficientVector, group_circulant, projective_group_circulant
from .errors import OrderError
from .groups import Representation, induced_factor_set, make_cyclic_group, make_elementary_abelian
from .linalg import (
    HADAMARD,
    I2,
    SIGMA_X,
    SIGMA_Z,
    as_matrix,
    dft_matrix,
    frobenius_coefficient,
    is_unitary,
    kron,
    matrix_to_json,
    max_abs_diff,
)
from .simulator import apply_circuit, circuit_unitary, verify_realizes
from .synth import fourier_circulant_circuit, kitaev_circulant_identity, lcu_circuit, projective_lcu_circuit

__all__ = [
    "Check",
    "DemoBundle",
    "hartley_matrix",
    "hartley_demo",
    "fractional_coefficients",
    "fractional_matrix",
    "fractional_diagonal",
    "fractional_demo",
    "pauli_representation",
    "pauli_decompose",
    "teleport_unitary",
    "teleportation_demo",
    "kitaev_demo",
    "cyclic_power_rep",
    "HARTLEY_COEFFICIENTS",
    "PAULI_DISPLAY_ORDER",
]

DEMO_TOL = 1e-9
HARTLEY_COEFFICIENTS = ((1 - 1j) / 2, (1 + 1j) / 2)


@dataclass
class Check:
    passed: bool
    value: float
    tol: float
    note: str = ""

    def to_json(self):
        out = {"pass": self.passed, "value": self.value, "tol": self.tol}
        if self.note:
            out["note"] = self.note
        return out


def _le(value, tol, note=""):
    return Check(bool(value <= tol), float(value), float(tol), note)


@dataclass
class DemoBundle:
    name: str
    representation: Representation
    coefficients: CoefficientVector
    reference_matrix: np.ndarray
    circuit: Circuit
    checks: dict = field(default_factory=dict)
    extra_circuits: dict = field(default_factory=dict)

    @property
    def passed(self):
        return all(c.passed for c in self.checks.values())

    def to_json(self):
        return {
            "name": self.name,
            "circuit": serialize(self.circuit),
            "reference_matrix": matrix_to_json(self.reference_matrix),
            "checks": {k: v.to_json() for k, v in self.checks.items()},
            "pass": self.passed,
        }


def _check_qubits(n_qubits):
    if not 2 <= n_qubits <= 5:
        raise ValueError(f"n_qubits must be between 2 and 5, got {n_qubits}")


def hartley_matrix(n_dim):
    """Discrete Hartley transform ``cas(2 pi k l / N) / sqrt(N)``."""
    if n_dim < 2:
        raise ValueError("n_dim must be >= 2")
    k = np.arange(n_dim)
    x = 2 * np.pi * (np.outer(k, k) % n_dim) / n_dim
    return ((np.cos(x) + np.sin(x)) / np.sqrt(n_dim)).astype(complex)


def cyclic_power_rep(u, k, tol=1e-10, labels=None):
    """Representation ``g -> u**g`` of Z/2^k.

    Raises
    ------
    OrderError
        If ``u**(2**k)`` is not the identity.
    """
    u = as_matrix(u)
    order = 1 << k
    powers = [np.eye(u.shape[0], dtype=complex)]
    for _ in range(order):
        powers.append(powers[-1] @ u)
    r = max_abs_diff(powers[-1], np.eye(u.shape[0]))
    if r > tol:
        raise OrderError(f"u^{order} differs from the identity by {r:.3e}")
    if labels is None:
        labels = tuple(f"U^{1 << (k - i)}" if i < k else "U" for i in range(1, k + 1))
    return Representation(make_cyclic_group(k), powers[:order], None, labels)


def hartley_demo(n_qubits, tol=DEMO_TOL):
    """Hartley transform on ``n_qubits`` data qubits with one ancilla.

    ``A_N = F_N (alpha I + beta F_N^2)``; the second factor is a Z/2 linear
    combination whose circulant is ``R``.
    """
    _check_qubits(n_qubits)
    size = 1 << n_qubits
    f = dft_matrix(size)
    f2 = f @ f
    rep = Representation(make_cyclic_group(1), [np.eye(size), f2], None, (f"F_{size}^2",))
    alpha = CoefficientVector(rep.group, HARTLEY_COEFFICIENTS)
    inner = lcu_circuit(rep, alpha, tol, circulant_label="R")
    data = tuple(range(n_qubits))
    gates = list(inner.gates)
    gates.insert(1, Block(data, f, f"F_{size}"))
    circuit = inner.with_gates(gates)
    ref = hartley_matrix(size)

    a, b = HARTLEY_COEFFICIENTS
    r_expected = 0.5 * np.array([[1 - 1j, 1 + 1j], [1 + 1j, 1 - 1j]])
    report = verify_realizes(circuit, ref, tol)
    checks = {
        "realization": _le(max(report.max_deviation, report.max_leakage), tol),
        "linear_combination": _le(max_abs_diff(ref, a * f + b * f2 @ f), 1e-12),
        "circulant_is_R": _le(max_abs_diff(gates[3].matrix, r_expected), 1e-12),
        "one_ancilla": Check(circuit.num_ancilla_qubits == 1, circuit.num_ancilla_qubits, 1),
    }
    return DemoBundle("hartley", rep, alpha, ref, circuit, checks)


def fractional_coefficients(theta):
    """Coefficients of ``I, F, F^2, F^3`` in the fractional Fourier transform."""
    e = np.exp(1j * theta)
    c, s = np.cos(theta), np.sin(theta)
    alpha = [0.5 * (1 + e) * c, 0.5 * (1 - 1j * e) * s, 0.5 * (-1 + e) * c, 0.5 * (-1 - 1j * e) * s]
    return CoefficientVector(make_cyclic_group(2), alpha)


def fractional_matrix(n_dim, theta):
    f = dft_matrix(n_dim)
    a = fractional_coefficients(theta).alpha
    out = np.zeros((n_dim, n_dim), dtype=complex)
    p = np.eye(n_dim, dtype=complex)
    for coeff in a:
        out += coeff * p
        p = p @ f
    return out


def fractional_diagonal(theta):
    """Spectrum placing ``circ(a(theta)) = DFT4^-1 diag(.) DFT4`` (+ sign DFT).

    The two entries of modulus-one phase ``theta`` have opposite signs.
    """
    return np.exp(1j * theta * np.array([0, -1, 2, 1]))


def fractional_demo(n_qubits, theta, tol=DEMO_TOL, additivity_angles=(0.37, -1.2, 2.9)):
    _check_qubits(n_qubits)
    size = 1 << n_qubits
    f = dft_matrix(size)
    rep = cyclic_power_rep(f, 2, labels=(f"F_{size}^2", f"F_{size}"))
    alpha = fractional_coefficients(theta)
    circuit = lcu_circuit(rep, alpha, tol, circulant_label="C_theta")
    ref = fractional_matrix(size, theta)

    f4 = dft_matrix(4)
    c_theta = group_circulant(rep.group, alpha)
    diag_form = np.linalg.inv(f4) @ np.diag(fractional_diagonal(theta)) @ f4
    additivity = max(
        max_abs_diff(fractional_matrix(size, theta) @ fractional_matrix(size, phi), fractional_matrix(size, theta + phi))
        for phi in additivity_angles
    )
    report = verify_realizes(circuit, ref, tol)
    checks = {
        "realization": _le(max(report.max_deviation, report.max_leakage), tol),
        "unitary": Check(is_unitary(ref, 1e-10), float(np.max(np.abs(ref.conj().T @ ref - np.eye(size)))), 1e-10),
        "diagonal_form": _le(max_abs_diff(c_theta, diag_form), 1e-10),
        "additivity": _le(additivity, 1e-10),
    }
    return DemoBundle("fractional", rep, alpha, ref, circuit, checks)


def pauli_representation():
    """Projective representation of Z/2 x Z/2 with ``t_1 -> sigma_x``, ``t_2 -> sigma_z``.

    In index order the blocks are ``I, sigma_z, sigma_x, sigma_x sigma_z``.
    """
    group = make_elementary_abelian(2)
    images = [I2, SIGMA_Z, SIGMA_X, SIGMA_X @ SIGMA_Z]
    fs = induced_factor_set(group, images)
    return Representation(group, images, fs, ("X", "Z"))


# element indices of (0,0), (1,0), (0,1), (1,1): the basis order 1, sx, sz, sx sz
PAULI_DISPLAY_ORDER = (0, 2, 1, 3)


def pauli_decompose(u):
    """Coefficients of ``u`` on the Pauli blocks, via ``tr(B^dagger u) / 2``."""
    u = as_matrix(u)
    if u.shape != (2, 2) or not is_unitary(u, 1e-10):
        raise ValueError("pauli_decompose expects a 2x2 unitary")
    rep = pauli_representation()
    return CoefficientVector(rep.group, [frobenius_coefficient(b, u) for b in rep.images])


def teleport_unitary(u):
    """``[[a, conj(b)], [b, -conj(a)]]`` for the first column ``(a, b)`` of ``u``."""
    u = as_matrix(u)
    if u.shape != (2, 2) or not is_unitary(u, 1e-10):
        raise ValueError("teleportation expects a 2x2 unitary")
    a, b = u[0, 0], u[1, 0]
    return np.array([[a, np.conj(b)], [b, -np.conj(a)]])


def _teleport_formulas(v):
    a, b = v[0, 0], v[1, 0]
    ac, bc = np.conj(a), np.conj(b)
    cu = 0.5 * np.array(
        [
            [a - ac, b + bc, a + ac, b - bc],
            [b + bc, a - ac, b - bc, a + ac],
            [a + ac, -(b - bc), a - ac, -(b + bc)],
            [b - bc, -(a + ac), b + bc, -(a - ac)],
        ]
    )
    cu_tilde = np.array([[a, 0, 0, bc], [b, 0, 0, -ac], [0, b, -ac, 0], [0, a, bc, 0]])
    return cu, cu_tilde


def cu_circuit(v):
    """Two-qubit circuit for the projective circulant in display order.

    Qubit 1 carries the sigma_z address bit, qubit 0 the sigma_x bit.
    """
    gates = (Hadamard(1), Cnot(1, 0), SingleQubit(1, v, "U"), Cnot(1, 0), Cnot(0, 1), Hadamard(1))
    return Circuit(2, 0, gates)


def staged_teleport_circuit(v):
    """Prep / Bell / Recover circuit; qubit 0 receives ``v|0>``."""
    prep = (Hadamard(1), SingleQubit(2, v, "U"), Cnot(1, 0))
    bell = (Cnot(2, 1), Hadamard(2))
    recover = (Cnot(1, 0), ControlledBlock((2,), (0,), SIGMA_Z, "Z"), Hadamard(1), Hadamard(2))
    return Circuit(3, 0, prep + bell + recover), len(prep) + len(bell)


def teleportation_demo(u, tol=DEMO_TOL):
    """Teleport ``u|0>`` by the Pauli linear combination and check each rewrite.

    Checks:
    ``H_conj``: ``(H x 1) C_U (H x 1) = C~_U``.
    ``cnot_identity``: ``CNOT(1->0) CNOT(0->1) C~_U CNOT(1->0) = U x 1``.
    ``cu_circuit``: the H/CNOT/U circuit simulates to ``C_U``.
    ``staged_state``: the Prep/Bell/Recover circuit on ``|000>`` ends in the
    same state as the projective LCU circuit.
    ``branch_fidelity``: each of the four measurement branches, after its
    classical correction, leaves ``U|0>`` on the data qubit.
    """
    v = teleport_unitary(u)
    rep = pauli_representation()
    alpha = pauli_decompose(v)
    circuit = projective_lcu_circuit(rep, rep.group, alpha, tol)
    cu_formula, cu_tilde = _teleport_formulas(v)

    order = np.array(PAULI_DISPLAY_ORDER)
    cu = projective_group_circulant(rep.group, rep.factor_set, alpha)[np.ix_(order, order)]
    h1 = kron(HADAMARD, I2)
    cnot_10 = circuit_unitary(Circuit(2, 0, (Cnot(1, 0),)))
    cnot_01 = circuit_unitary(Circuit(2, 0, (Cnot(0, 1),)))

    report = verify_realizes(circuit, v, tol)
    staged, n_before_recover = staged_teleport_circuit(v)
    start = np.zeros(8, dtype=complex)
    start[0] = 1
    final_staged = apply_circuit(staged, start)[:, 0]
    final_lcu = apply_circuit(circuit, start)[:, 0]

    psi = v[:, 0]
    mid = apply_circuit(staged.with_gates(staged.gates[:n_before_recover]), start)[:, 0]
    fidelities = []
    for m1 in (0, 1):
        for m2 in (0, 1):
            amp = np.array([mid[(m2 << 2) | (m1 << 1) | x] for x in (0, 1)])
            amp = amp / np.linalg.norm(amp)
            fixed = np.linalg.matrix_power(SIGMA_Z, m2) @ np.linalg.matrix_power(SIGMA_X, m1) @ amp
            fidelities.append(abs(np.vdot(psi, fixed)) ** 2)

    checks = {
        "cu_formula": _le(max_abs_diff(cu, cu_formula), 1e-10),
        "H_conj": _le(max_abs_diff(h1 @ cu @ h1, cu_tilde), 1e-10),
        "cnot_identity": _le(max_abs_diff(cnot_10 @ cnot_01 @ cu_tilde @ cnot_10, kron(v, I2)), 1e-10),
        "cu_circuit": _le(max_abs_diff(circuit_unitary(cu_circuit(v)), cu), tol),
        "realization": _le(max(report.max_deviation, report.max_leakage), tol),
        "staged_state": _le(max_abs_diff(final_staged, final_lcu), tol),
        "branch_fidelity": _le(1 - min(fidelities), tol, note=f"fidelities {[round(x, 15) for x in fidelities]}"),
    }
    return DemoBundle(
        "teleport",
        rep,
        alpha,
        v,
        circuit,
        checks,
        extra_circuits={"cu": cu_circuit(v), "staged": staged},
    )


def kitaev_demo(k, phases, tol=1e-10):
    """Both sides of the Fourier/circulant identity plus its circuit form."""
    lhs, rhs = kitaev_circulant_identity(k, phases)
    beta = rhs[0]
    circuit = fourier_circulant_circuit(beta, k)
    group = make_cyclic_group(k)
    rep = Representation(group, np.ones((group.order, 1, 1)))
    checks = {
        "identity": _le(max_abs_diff(lhs, rhs), tol),
        "circuit": _le(max_abs_diff(circuit_unitary(circuit), rhs), 1e-9),
    }
    return DemoBundle("kitaev", rep, CoefficientVector(group, beta), rhs, circuit, checks)
