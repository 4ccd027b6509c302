"""
Fractional Fourier transform over Z/4
=====================================

Four coefficients a_0..a_3 turn the Fourier powers into a one-parameter
group ``F_theta`` with ``F_0 = I`` and ``F_{pi/2} = F``.
"""

# %%
import numpy as np

from qlcu import dft_matrix, fractional_coefficients, fractional_demo, fractional_matrix, group_circulant
from qlcu.catalog import fractional_diagonal
from qlcu.groups import make_cyclic_group

N = 8
for theta in (0.0, 0.3, np.pi / 2):
    print(theta, np.round(fractional_coefficients(theta).alpha, 4))

# %%
# Additivity: F_theta F_phi = F_{theta + phi}.
t, p = 0.4, 1.9
print(np.max(np.abs(fractional_matrix(N, t) @ fractional_matrix(N, p) - fractional_matrix(N, t + p))))

# %%
# The coefficient circulant is diagonalized by the 4-point DFT. Note the
# second and fourth eigenvalues carry opposite phases.
theta = 1.0
f4 = dft_matrix(4)
c = group_circulant(make_cyclic_group(2), fractional_coefficients(theta))
print(np.round(np.angle(fractional_diagonal(theta)) / theta, 6))
print(np.max(np.abs(c - np.linalg.inv(f4) @ np.diag(fractional_diagonal(theta)) @ f4)))

# %%
bundle = fractional_demo(3, theta)
print([g.label or g.kind for g in bundle.circuit.gates])
for name, check in bundle.checks.items():
    print(f"{name:14s} {check.value:.2e} <= {check.tol:.0e}")
