"""
Teleportation as a projective linear combination
================================================

Any single-qubit unitary is a combination of 1, X, Z, XZ. These form a
projective representation of Z/2 x Z/2, and the corresponding circuit,
rewritten with CNOTs, becomes the familiar teleportation protocol.
"""

# %%
import numpy as np

from qlcu import circuit_unitary, pauli_decompose, pauli_representation, projective_lcu_circuit, verify_realizes
from qlcu.catalog import PAULI_DISPLAY_ORDER, cu_circuit, staged_teleport_circuit, teleport_unitary, teleportation_demo
from qlcu.circulant import projective_group_circulant

rng = np.random.default_rng(7)
psi = rng.standard_normal(2) + 1j * rng.standard_normal(2)
psi /= np.linalg.norm(psi)
u = np.column_stack([psi, [-np.conj(psi[1]), np.conj(psi[0])]])
v = teleport_unitary(u)
print(np.round(v, 3))

# %%
rep = pauli_representation()
print("omega:\n", np.round(rep.factor_set.table.real).astype(int))
alpha = pauli_decompose(v)
order = list(PAULI_DISPLAY_ORDER)
print("coefficients on 1, X, Z, XZ:", np.round(alpha.alpha[order], 3))

# %%
# The projective circulant, in the 1, X, Z, XZ order, and its 6-gate circuit.
cu = projective_group_circulant(rep.group, rep.factor_set, alpha)[np.ix_(order, order)]
print(np.round(cu, 3))
print("circuit error:", np.max(np.abs(circuit_unitary(cu_circuit(v)) - cu)))

# %%
circuit = projective_lcu_circuit(rep, rep.group, alpha)
print([g.label or g.kind for g in circuit.gates])
print(verify_realizes(circuit, v, 1e-9).to_json())

# %%
# Staged protocol: preparation, Bell measurement, corrections.
staged, cut = staged_teleport_circuit(v)
print([g.label or g.kind for g in staged.gates[:cut]], "|", [g.label or g.kind for g in staged.gates[cut:]])
bundle = teleportation_demo(u)
for name, check in bundle.checks.items():
    print(f"{name:16s} {'ok' if check.passed else 'FAILED'} {check.value:.1e}")
