"""Exact dense statevector simulation.

Amplitudes are indexed by the integer with bits ``x_{n-1} ... x_0``. Gates act
by reshaping to one axis per qubit and contracting the local matrix into the
target axes, restricted to the slice where every control is 1; the full
2**n x 2**n operator is never formed.
"""

from dataclasses import dataclass

import numpy as np

from .errors import SizeCapError
from .linalg import DEFAULT_TOL, as_matrix, num_qubits_for

__all__ = [
    "StateVector",
    "VerificationReport",
    "MAX_QUBITS",
    "apply_gate",
    "apply_circuit",
    "circuit_unitary",
    "verify_realizes",
    "trace_states",
    "basis_state",
]

MAX_QUBITS = 12


@dataclass(frozen=True, eq=False)
class StateVector:
    num_qubits: int
    amplitudes: np.ndarray

    def __post_init__(self):
        a = np.array(self.amplitudes, dtype=complex).ravel()
        if a.size != 1 << self.num_qubits:
            raise ValueError(f"need {1 << self.num_qubits} amplitudes, got {a.size}")
        norm = float(np.vdot(a, a).real)
        if abs(norm - 1) > DEFAULT_TOL:
            raise ValueError(f"state is not normalized (squared norm {norm!r})")
        a.setflags(write=False)
        object.__setattr__(self, "amplitudes", a)

    @classmethod
    def from_amplitudes(cls, amplitudes):
        a = np.asarray(amplitudes, dtype=complex).ravel()
        return cls(num_qubits_for(a.size), a)

    def norm_squared(self):
        return float(np.vdot(self.amplitudes, self.amplitudes).real)


def basis_state(num_qubits, index=0):
    a = np.zeros(1 << num_qubits, dtype=complex)
    a[index] = 1
    return StateVector(num_qubits, a)


def _apply(arr, n, gate):
    """Apply ``gate`` to ``arr`` of shape (2**n, batch); returns a new array."""
    batch = arr.shape[1]
    t = arr.reshape((2,) * n + (batch,)).copy()
    index = [slice(None)] * (n + 1)
    for c in gate.controls:
        index[n - 1 - c] = 1
    index = tuple(index)
    sub = t[index]
    kept = [ax for ax in range(n + 1) if not (ax < n and (n - 1 - ax) in gate.controls)]
    # local bit k <-> targets[k]; row index of the matrix puts targets[-1] first
    axes = [kept.index(n - 1 - q) for q in reversed(gate.targets)]
    front = np.moveaxis(sub, axes, range(len(axes)))
    shape = front.shape
    m = gate.matrix
    out = (m @ front.reshape(m.shape[0], -1)).reshape(shape)
    t[index] = np.moveaxis(out, range(len(axes)), axes)
    return t.reshape(1 << n, batch)


def _check_indices(gate, n):
    for q in gate.qubits:
        if not 0 <= q < n:
            raise IndexError(f"qubit {q} out of range for {n} qubits")


def apply_gate(state, gate):
    """Return the state after ``gate``."""
    _check_indices(gate, state.num_qubits)
    out = _apply(state.amplitudes.reshape(-1, 1), state.num_qubits, gate)
    return StateVector(state.num_qubits, out[:, 0])


def apply_circuit(circuit, columns):
    """Push a (2**n, batch) array of column states through every gate."""
    n = circuit.num_qubits
    arr = np.array(columns, dtype=complex).reshape(1 << n, -1)
    for g in circuit.gates:
        arr = _apply(arr, n, g)
    return arr


def _cap(n):
    if n > MAX_QUBITS:
        raise SizeCapError(f"{n} qubits exceeds the simulation cap of {MAX_QUBITS}")


def circuit_unitary(circuit):
    """Full unitary of ``circuit`` (column j = image of basis state j)."""
    _cap(circuit.num_qubits)
    return apply_circuit(circuit, np.eye(1 << circuit.num_qubits, dtype=complex))


def trace_states(circuit, state):
    """Input state followed by the state after each gate."""
    states = [state]
    for g in circuit.gates:
        states.append(apply_gate(states[-1], g))
    return states


@dataclass
class VerificationReport:
    passed: bool
    max_deviation: float
    max_leakage: float
    tol: float

    def __bool__(self):
        return self.passed

    def to_json(self):
        return {"pass": self.passed, "max_deviation": self.max_deviation, "max_leakage": self.max_leakage, "tol": self.tol}


def verify_realizes(circuit, target, tol=DEFAULT_TOL):
    """Check ``|0>_anc |x> -> |0>_anc target|x>`` on every data basis state."""
    target = as_matrix(target)
    dim = 1 << circuit.num_data_qubits
    if target.shape != (dim, dim):
        raise ValueError(f"target shape {target.shape} does not match {circuit.num_data_qubits} data qubits")
    _cap(circuit.num_qubits)
    cols = np.zeros((1 << circuit.num_qubits, dim), dtype=complex)
    cols[:dim, :dim] = np.eye(dim)
    out = apply_circuit(circuit, cols)
    deviation = float(np.max(np.abs(out[:dim] - target)))
    leakage = float(np.max(np.abs(out[dim:]))) if out.shape[0] > dim else 0.0
    return VerificationReport(deviation <= tol and leakage <= tol, deviation, leakage, float(tol))
