"""
Cyclic circulants from diagonal phases
======================================

Conjugating a diagonal of phases by the DFT gives a circulant whose first
row is the scaled DFT of the phases. The same identity turns any cyclic
circulant gate into inverse QFT, a diagonal, and QFT.
"""

# %%
import numpy as np

from qlcu import circuit_unitary, kitaev_circulant_identity, qft_circuit, dft_matrix
from qlcu.synth import fourier_circulant_circuit

lhs, rhs = kitaev_circulant_identity(1, [1, -1])
print(np.round(rhs.real, 12))

# %%
rng = np.random.default_rng(0)
phases = np.exp(2j * np.pi * rng.random(8))
lhs, rhs = kitaev_circulant_identity(3, phases)
print("identity error:", np.max(np.abs(lhs - rhs)))

# %%
c = fourier_circulant_circuit(rhs[0], 3)
print(len(c.gates), "gates, error", np.max(np.abs(circuit_unitary(c) - rhs)))
print("QFT(3) error:", np.max(np.abs(circuit_unitary(qft_circuit(3)) - dft_matrix(8))))
