"""Case operators and linear-combination circuits.

Layout: ``m`` data qubits (0 .. m-1) carry the blocks, ``n`` ancillas
(m .. m+n-1) carry the group address, with the ancilla of ``a_1`` the most
significant qubit overall. The ancilla register's basis index is therefore the
element index, and the full unitary is block-structured in element order.
"""

import numpy as np

from .circuit import Block, Circuit, ControlledBlock, Hadamard, inverse, qft_circuit, relabel
from .circulant import _alpha, group_circulant, projective_group_circulant
from .errors import NonUnitaryCirculantError, NonUnitaryTargetError, PhaseRecoveryError
from .groups import (
    Representation,
    _as_blocks,
    _phase_between,
    induced_factor_set,
    literal_products,
    make_cyclic_group,
)
from .linalg import DEFAULT_TOL, dft_matrix, num_qubits_for, unitarity_defect

__all__ = [
    "case_operator_circuit",
    "lcu_circuit",
    "projective_lcu_circuit",
    "fourier_circulant_circuit",
    "kitaev_circulant_identity",
    "ancilla_qubit",
]


def ancilla_qubit(m, n, i):
    """Qubit holding address bit ``a_i`` (1-based) above ``m`` data qubits."""
    return m + n - i


def case_operator_circuit(rep):
    """Block-diagonal ``diag(D(g))`` from one controlled ``D(t_i)`` per ancilla.

    ``D(t_n)`` is applied first so that the block at address ``a`` is the
    literal product ``D(t_1)**a_1 @ ... @ D(t_n)**a_n``.
    """
    m = num_qubits_for(rep.block_dim)
    n = rep.group.n_generators
    data = tuple(range(m))
    gates = []
    for i, (img, label) in reversed(list(enumerate(zip(rep.generator_images(), rep.generator_labels()), start=1))):
        gates.append(ControlledBlock((ancilla_qubit(m, n, i),), data, img, label))
    return Circuit(m, n, tuple(gates))


def _hadamard_layer(m, n):
    return tuple(Hadamard(ancilla_qubit(m, n, i)) for i in range(1, n + 1))


def _check_target(images, alpha, tol):
    target = np.tensordot(alpha, images, axes=1)
    defect = unitarity_defect(target)
    if defect > tol:
        raise NonUnitaryTargetError(f"sum of alpha_g D(g) is not unitary (defect {defect:.3e})")
    return target


def _assemble(rep, middle, tol, fourier_alpha=None):
    m = num_qubits_for(rep.block_dim)
    n = rep.group.n_generators
    case = case_operator_circuit(rep)
    if fourier_alpha is not None:
        mid = fourier_circulant_circuit(fourier_alpha, n)
        mid_gates = relabel(mid, {q: m + q for q in range(n)}, m, n).gates
    else:
        mid_gates = tuple(middle)
    gates = _hadamard_layer(m, n) + case.gates + mid_gates + inverse(case).gates + _hadamard_layer(m, n)
    return Circuit(m, n, gates)


def lcu_circuit(rep, alpha, tol=DEFAULT_TOL, circulant_label="C_A", fourier_circulant=False):
    """Circuit realizing ``A = sum_g alpha_g D(g)`` with ``n`` ancillas.

    Hadamards on the ancillas, the case operator, the group circulant of
    ``alpha`` on the ancillas, the inverse case operator, Hadamards again.
    With ``fourier_circulant`` (cyclic groups only) the circulant is emitted
    as inverse QFT, diagonal phase, QFT.

    Raises
    ------
    NonUnitaryCirculantError, NonUnitaryTargetError
    """
    if rep.is_projective:
        raise ValueError("representation is projective; use projective_lcu_circuit")
    grp = rep.group
    a = _alpha(grp, alpha)
    c = group_circulant(grp, a)
    defect = unitarity_defect(c)
    if defect > tol:
        raise NonUnitaryCirculantError(f"group circulant is not unitary (defect {defect:.3e})")
    _check_target(rep.images, a, tol)
    m = num_qubits_for(rep.block_dim)
    anc = tuple(range(m, m + grp.n_generators))
    if fourier_circulant:
        if grp.kind != "cyclic":
            raise ValueError("the Fourier form of the circulant needs a cyclic group")
        return _assemble(rep, None, tol, fourier_alpha=a)
    return _assemble(rep, [Block(anc, c, circulant_label)], tol)


def projective_lcu_circuit(blocks, group, alpha, tol=DEFAULT_TOL, labels=None, circulant_label="C_A"):
    """Circuit realizing ``sum_g alpha_g blocks(g)`` for a projective representation.

    The case operator applies the literal transversal products ``L(g)``; any
    unit phase between ``blocks(g)`` and ``L(g)`` is folded into the
    coefficients. The middle gate is the projective circulant for the factor
    set of ``L``. Running the inverse case operator afterwards yields
    ``L(g)^-1`` where ``L(g^-1)`` is needed, which differs by ``omega(g, g^-1)``;
    that diagonal is emitted as an extra ancilla-only gate when nontrivial.

    Raises
    ------
    PhaseRecoveryError, NonUnitaryCirculantError, NonUnitaryTargetError
    """
    imgs = _as_blocks(group, blocks)
    a = _alpha(group, alpha)
    _check_target(imgs, a, tol)
    n = group.n_generators
    gens = [imgs[1 << (n - 1 - i)] for i in range(n)]
    literal = literal_products(group, gens)
    phases = np.empty(group.order, dtype=complex)
    for i in range(group.order):
        try:
            phases[i] = _phase_between(imgs[i], literal[i], tol)
        except PhaseRecoveryError as exc:
            raise PhaseRecoveryError(f"block at {group.address(i)} vs transversal product: {exc}") from None
    fs = induced_factor_set(group, literal, tol)
    a_lit = a * phases
    c = projective_group_circulant(group, fs, a_lit)
    defect = unitarity_defect(c)
    if defect > tol:
        raise NonUnitaryCirculantError(f"projective circulant is not unitary (defect {defect:.3e})")
    if labels is None and isinstance(blocks, Representation):
        labels = blocks.labels
    rep = Representation(group, literal, fs, labels)
    m = num_qubits_for(rep.block_dim)
    anc = tuple(range(m, m + n))
    middle = [Block(anc, c, circulant_label)]
    back = fs.table[np.arange(group.order), group.inverse_table]
    if np.max(np.abs(back - 1)) > tol:
        middle.append(Block(anc, np.diag(back), "omega(g,g^-1)"))
    return _assemble(rep, middle, tol)


def fourier_circulant_circuit(alpha, k):
    """Circuit on ``k`` qubits for the cyclic circulant of ``alpha``.

    ``circ(alpha) = F diag(mu) F^dagger`` with ``F`` the normalized DFT and
    ``mu`` the unnormalized DFT of ``alpha``; emitted as inverse QFT, a
    diagonal block, QFT.
    """
    a = np.asarray(alpha, dtype=complex).ravel()
    if a.size != 1 << k:
        raise ValueError(f"need {1 << k} coefficients")
    mu = dft_matrix(1 << k, normalized=False) @ a
    qft = qft_circuit(k)
    diag = Block(tuple(range(k)), np.diag(mu), "diag")
    return Circuit(k, 0, inverse(qft).gates + (diag,) + qft.gates)


def kitaev_circulant_identity(k, diag_phases):
    """Both sides of ``DFT^-1 diag(phases) DFT = circ(beta)`` over Z/2^k.

    ``beta = F phases / 2**k`` with ``F`` the unnormalized DFT (entry
    ``exp(2 pi i j l / N)``).
    """
    size = 1 << k
    phases = np.asarray(diag_phases, dtype=complex).ravel()
    if phases.size != size:
        raise ValueError(f"need {size} phases")
    if np.max(np.abs(np.abs(phases) - 1)) > DEFAULT_TOL:
        raise ValueError("diagonal entries must have unit modulus")
    f = dft_matrix(size, normalized=False)
    lhs = np.linalg.solve(f, np.diag(phases) @ f)
    beta = f @ phases / size
    rhs = group_circulant(make_cyclic_group(k), beta)
    return lhs, rhs


def block_of(matrix, block_dim, i, j):
    """Block ``(i, j)`` of a matrix partitioned into ``block_dim`` squares."""
    return matrix[i * block_dim : (i + 1) * block_dim, j * block_dim : (j + 1) * block_dim]
