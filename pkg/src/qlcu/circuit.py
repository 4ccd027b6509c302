"""Gate-list circuit IR with inversion, cost accounting and JSON serialization.

Qubit 0 is the least significant bit of the basis label. Ancilla qubits sit
above the data qubits. A multi-qubit unitary acting on ``targets`` reads local
bit ``k`` from qubit ``targets[k]``, so ``targets[0]`` is its least
significant qubit.
"""

import json
from dataclasses import dataclass, field

import numpy as np

from .errors import MissingCostError, ParseError
from .linalg import HADAMARD, SIGMA_X, as_matrix, matrix_from_json, matrix_to_json

__all__ = [
    "Gate",
    "Hadamard",
    "SingleQubit",
    "Cnot",
    "ControlledBlock",
    "Block",
    "Circuit",
    "CostReport",
    "compose",
    "inverse",
    "relabel",
    "cost_report",
    "qft_circuit",
    "serialize",
    "parse",
    "SCHEMA_VERSION",
]

SCHEMA_VERSION = 1
INVERSE_SUFFIX = "^-1"


def _frozen_matrix(m, n_targets):
    a = np.array(as_matrix(m), dtype=complex)
    dim = 1 << n_targets
    if a.shape != (dim, dim):
        raise ValueError(f"unitary must be {dim}x{dim} for {n_targets} target(s), got {a.shape}")
    a.setflags(write=False)
    return a


def _inverse_label(label):
    if label.endswith(INVERSE_SUFFIX):
        return label[: -len(INVERSE_SUFFIX)]
    return label + INVERSE_SUFFIX


class Gate:
    """Common interface: ``controls``, ``targets``, local ``matrix`` and ``dagger()``."""

    kind = None

    @property
    def qubits(self):
        return tuple(self.controls) + tuple(self.targets)

    def _key(self):
        return (self.kind, tuple(self.controls), tuple(self.targets), self.label)

    def __eq__(self, other):
        if not isinstance(other, Gate):
            return NotImplemented
        return self._key() == other._key() and np.array_equal(self.matrix, other.matrix)

    def __hash__(self):
        return hash(self._key())


@dataclass(frozen=True, eq=False)
class Hadamard(Gate):
    target: int
    kind = "h"
    controls = ()
    label = None

    @property
    def targets(self):
        return (self.target,)

    @property
    def matrix(self):
        return HADAMARD

    def dagger(self):
        return self


@dataclass(frozen=True, eq=False)
class SingleQubit(Gate):
    target: int
    unitary: np.ndarray
    label: str = "U"
    kind = "single"
    controls = ()

    def __post_init__(self):
        object.__setattr__(self, "unitary", _frozen_matrix(self.unitary, 1))

    @property
    def targets(self):
        return (self.target,)

    @property
    def matrix(self):
        return self.unitary

    def dagger(self):
        return SingleQubit(self.target, self.unitary.conj().T, _inverse_label(self.label))


@dataclass(frozen=True, eq=False)
class Cnot(Gate):
    control: int
    target: int
    kind = "cnot"
    label = None

    @property
    def controls(self):
        return (self.control,)

    @property
    def targets(self):
        return (self.target,)

    @property
    def matrix(self):
        return SIGMA_X

    def dagger(self):
        return self


@dataclass(frozen=True, eq=False)
class ControlledBlock(Gate):
    controls: tuple
    targets: tuple
    unitary: np.ndarray
    label: str = "U"
    kind = "controlled_block"

    def __post_init__(self):
        object.__setattr__(self, "controls", tuple(int(q) for q in self.controls))
        object.__setattr__(self, "targets", tuple(int(q) for q in self.targets))
        if not self.controls:
            raise ValueError("ControlledBlock needs at least one control")
        object.__setattr__(self, "unitary", _frozen_matrix(self.unitary, len(self.targets)))

    @property
    def matrix(self):
        return self.unitary

    def dagger(self):
        return ControlledBlock(self.controls, self.targets, self.unitary.conj().T, _inverse_label(self.label))


@dataclass(frozen=True, eq=False)
class Block(Gate):
    targets: tuple
    unitary: np.ndarray
    label: str = "U"
    kind = "block"
    controls = ()

    def __post_init__(self):
        object.__setattr__(self, "targets", tuple(int(q) for q in self.targets))
        object.__setattr__(self, "unitary", _frozen_matrix(self.unitary, len(self.targets)))

    @property
    def matrix(self):
        return self.unitary

    def dagger(self):
        return Block(self.targets, self.unitary.conj().T, _inverse_label(self.label))


def _check_gate(gate, total):
    qs = gate.qubits
    if not gate.targets:
        raise ValueError(f"{gate.kind} gate has no targets")
    if any(q < 0 or q >= total for q in qs):
        raise ValueError(f"{gate.kind} gate index out of range for {total} qubits: {qs}")
    if len(set(qs)) != len(qs):
        raise ValueError(f"{gate.kind} gate repeats a qubit: {qs}")


@dataclass(frozen=True)
class Circuit:
    """Immutable gate list over data qubits (low) and ancilla qubits (high)."""

    num_data_qubits: int
    num_ancilla_qubits: int = 0
    gates: tuple = field(default=())

    def __post_init__(self):
        if self.num_data_qubits < 0 or self.num_ancilla_qubits < 0:
            raise ValueError("qubit counts must be nonnegative")
        object.__setattr__(self, "gates", tuple(self.gates))
        for g in self.gates:
            if not isinstance(g, Gate):
                raise TypeError(f"not a gate: {g!r}")
            _check_gate(g, self.num_qubits)

    @property
    def num_qubits(self):
        return self.num_data_qubits + self.num_ancilla_qubits

    @property
    def ancilla_qubits(self):
        return tuple(range(self.num_data_qubits, self.num_qubits))

    def __len__(self):
        return len(self.gates)

    def __iter__(self):
        return iter(self.gates)

    def with_gates(self, gates):
        return Circuit(self.num_data_qubits, self.num_ancilla_qubits, tuple(gates))


def compose(a, b):
    """Run ``a`` then ``b``."""
    if (a.num_data_qubits, a.num_ancilla_qubits) != (b.num_data_qubits, b.num_ancilla_qubits):
        raise ValueError("cannot compose circuits with different qubit layouts")
    return a.with_gates(a.gates + b.gates)


def inverse(c):
    """Reverse the gate order and dagger every gate."""
    return c.with_gates(g.dagger() for g in reversed(c.gates))


def _remap_gate(g, m):
    if isinstance(g, Hadamard):
        return Hadamard(m[g.target])
    if isinstance(g, SingleQubit):
        return SingleQubit(m[g.target], g.unitary, g.label)
    if isinstance(g, Cnot):
        return Cnot(m[g.control], m[g.target])
    if isinstance(g, ControlledBlock):
        return ControlledBlock(tuple(m[q] for q in g.controls), tuple(m[q] for q in g.targets), g.unitary, g.label)
    if isinstance(g, Block):
        return Block(tuple(m[q] for q in g.targets), g.unitary, g.label)
    raise TypeError(f"unknown gate {g!r}")


def relabel(c, mapping, num_data_qubits, num_ancilla_qubits=0):
    """Embed ``c`` in a larger layout, sending qubit ``q`` to ``mapping[q]``."""
    gates = tuple(_remap_gate(g, mapping) for g in c.gates)
    return Circuit(num_data_qubits, num_ancilla_qubits, gates)


@dataclass
class CostReport:
    """Upper bound on the elementary-gate count, with its per-gate breakdown."""

    bound: int
    breakdown: list
    assumptions: list

    def to_json(self):
        return {"elementary_count_upper_bound": self.bound, "breakdown": self.breakdown, "assumptions": self.assumptions}


# single controls: a controlled single-qubit gate costs <= 6 elementary gates,
# a controlled elementary gate in general <= 14
CONTROLLED_SINGLE_QUBIT_FACTOR = 6
CONTROLLED_FACTOR = 14
DEFAULT_BLOCK_COSTS = {"SWAP": 3}

_ASSUMPTIONS = {
    "controlled": "a ControlledBlock with one control costs 14 x the block's cost (6 x when the block is 2x2)",
    "multi": "each control beyond the first doubles the ControlledBlock bound",
    "one_qubit": "an unlisted 2x2 block is a single-qubit gate of cost 1",
    "inverse": f"a label ending in '{INVERSE_SUFFIX}' falls back to the cost of the forward label",
    "swap": "an unlisted SWAP block costs 3 (three CNOTs)",
}


def _block_cost(gate, block_costs, used):
    label = gate.label
    for key in (label, _inverse_label(label) if label.endswith(INVERSE_SUFFIX) else None):
        if key is not None and key in block_costs:
            if key != label:
                used.add("inverse")
            return int(block_costs[key])
    base = label[: -len(INVERSE_SUFFIX)] if label.endswith(INVERSE_SUFFIX) else label
    if base in DEFAULT_BLOCK_COSTS and gate.matrix.shape == (4, 4):
        used.add("swap")
        return DEFAULT_BLOCK_COSTS[base]
    if gate.matrix.shape == (2, 2):
        used.add("one_qubit")
        return 1
    raise MissingCostError(f"no cost supplied for block label {label!r}")


def cost_report(c, block_costs=None):
    """Count elementary gates, bounding named blocks by the supplied costs.

    Hadamard, single-qubit and CNOT gates count 1. A ``Block`` costs its
    label's entry in ``block_costs``. A ``ControlledBlock`` with one control
    costs 14 times that entry (6 times for a 2x2 block); every further
    control doubles it.

    Raises
    ------
    MissingCostError
        A block label has no entry and no default applies.
    """
    block_costs = dict(block_costs or {})
    used = set()
    breakdown = []
    total = 0
    for i, g in enumerate(c.gates):
        if isinstance(g, (Hadamard, SingleQubit, Cnot)):
            cost = 1
        elif isinstance(g, Block):
            cost = _block_cost(g, block_costs, used)
        elif isinstance(g, ControlledBlock):
            base = _block_cost(g, block_costs, used)
            factor = CONTROLLED_SINGLE_QUBIT_FACTOR if g.matrix.shape == (2, 2) else CONTROLLED_FACTOR
            used.add("controlled")
            extra = len(g.controls) - 1
            if extra:
                used.add("multi")
            cost = factor * base * (2**extra)
        else:
            raise TypeError(f"unknown gate {g!r}")
        total += cost
        breakdown.append({"index": i, "kind": g.kind, "label": g.label, "cost": cost})
    assumptions = [_ASSUMPTIONS[k] for k in _ASSUMPTIONS if k in used]
    return CostReport(total, breakdown, assumptions)


def qft_circuit(n):
    """Textbook QFT on ``n`` qubits: Hadamards, controlled phases, final swaps.

    Simulates to ``dft_matrix(2**n)`` with the +2*pi*i sign convention.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    gates = []
    for j in reversed(range(n)):
        gates.append(Hadamard(j))
        for k in reversed(range(j)):
            d = j - k
            phase = np.diag([1.0, np.exp(1j * np.pi / 2**d)])
            gates.append(ControlledBlock((k,), (j,), phase, f"R{d + 1}"))
    swap = np.eye(4)[[0, 2, 1, 3]]
    for i in range(n // 2):
        gates.append(Block((i, n - 1 - i), swap, "SWAP"))
    return Circuit(n, 0, tuple(gates))


def _gate_to_json(g):
    out = {"kind": g.kind, "targets": list(g.targets)}
    if g.controls:
        out["controls"] = list(g.controls)
    if isinstance(g, (SingleQubit, ControlledBlock, Block)):
        out["label"] = g.label
        out["matrix"] = matrix_to_json(g.matrix, hexfloat=True)
    return out


def serialize(c):
    """JSON text for ``c``; matrix entries are hex floats so parsing is exact."""
    doc = {
        "version": SCHEMA_VERSION,
        "data_qubits": c.num_data_qubits,
        "ancilla_qubits": c.num_ancilla_qubits,
        "gates": [_gate_to_json(g) for g in c.gates],
    }
    return json.dumps(doc, sort_keys=True, indent=1)


def _int_list(obj, key, where, required=True):
    if key not in obj:
        if required:
            raise ParseError(f"missing field {key!r}", where)
        return []
    v = obj[key]
    if not isinstance(v, list) or not all(isinstance(x, int) and not isinstance(x, bool) for x in v):
        raise ParseError(f"{key!r} must be a list of integers", f"{where}.{key}")
    return v


def _gate_from_json(obj, where, total):
    if not isinstance(obj, dict):
        raise ParseError("gate must be an object", where)
    kind = obj.get("kind")
    targets = _int_list(obj, "targets", where)
    controls = _int_list(obj, "controls", where, required=False)
    for q in targets + controls:
        if not 0 <= q < total:
            raise ParseError(f"qubit index {q} out of range for {total} qubits", where)
    label = obj.get("label", "U")

    def mat():
        if "matrix" not in obj:
            raise ParseError(f"{kind} gate needs a matrix", where)
        return matrix_from_json(obj["matrix"], f"{where}.matrix")

    def one(lst, name):
        if len(lst) != 1:
            raise ParseError(f"{kind} gate needs exactly one {name}", where)
        return lst[0]

    try:
        if kind == "h":
            return Hadamard(one(targets, "target"))
        if kind == "single":
            return SingleQubit(one(targets, "target"), mat(), label)
        if kind == "cnot":
            return Cnot(one(controls, "control"), one(targets, "target"))
        if kind == "controlled_block":
            return ControlledBlock(tuple(controls), tuple(targets), mat(), label)
        if kind == "block":
            return Block(tuple(targets), mat(), label)
    except ValueError as exc:
        raise ParseError(str(exc), where) from None
    raise ParseError(f"unknown gate kind {kind!r}", where)


def parse(text):
    """Inverse of :func:`serialize`.

    Raises
    ------
    ParseError
        With ``position`` set to a character offset for malformed JSON, or to a
        path such as ``gates[3]`` for schema violations.
    """
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc.msg}", exc.pos) from None
    if not isinstance(doc, dict):
        raise ParseError("circuit must be a JSON object", "$")
    if doc.get("version") != SCHEMA_VERSION:
        raise ParseError(f"unsupported version {doc.get('version')!r}", "version")
    nd, na = doc.get("data_qubits"), doc.get("ancilla_qubits")
    for key, v in (("data_qubits", nd), ("ancilla_qubits", na)):
        if not isinstance(v, int) or isinstance(v, bool) or v < 0:
            raise ParseError(f"{key} must be a nonnegative integer", key)
    gates = doc.get("gates")
    if not isinstance(gates, list):
        raise ParseError("gates must be a list", "gates")
    parsed = tuple(_gate_from_json(g, f"gates[{i}]", nd + na) for i, g in enumerate(gates))
    try:
        return Circuit(nd, na, parsed)
    except ValueError as exc:
        raise ParseError(str(exc), "gates") from None
