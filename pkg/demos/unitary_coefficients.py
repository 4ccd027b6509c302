"""
Choosing coefficients with a unitary circulant
==============================================

With linearly dependent images the minimal-norm coefficients can give a
non-unitary circulant. For abelian groups the free character values can be
set to 1 instead.
"""

# %%
import numpy as np

from qlcu import Representation, group_circulant, is_unitary, lcu_circuit, make_cyclic_group, verify_realizes
from qlcu import solve_coefficients, unitarize_coefficients
from qlcu.errors import NonUnitaryCirculantError

sz = np.diag([1.0, -1.0])
rep = Representation(make_cyclic_group(2), [np.linalg.matrix_power(sz, g) for g in range(4)])
target = sz

naive = solve_coefficients(target, rep)
print("minimal norm:", np.round(naive.alpha, 3), is_unitary(group_circulant(rep.group, naive)))
try:
    lcu_circuit(rep, naive)
except NonUnitaryCirculantError as exc:
    print("rejected:", exc)

# %%
alpha = unitarize_coefficients(target, rep)
print("unitarized:", np.round(alpha.alpha, 3), is_unitary(group_circulant(rep.group, alpha)))
print(verify_realizes(lcu_circuit(rep, alpha), target, 1e-9).passed)
