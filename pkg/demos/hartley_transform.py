"""
Discrete Hartley transform with one ancilla
===========================================

The Hartley matrix is a two-term combination of Fourier powers,
``A_N = F_N ((1-i)/2 I + (1+i)/2 F_N^2)``, so one ancilla qubit suffices.
"""

# %%
import numpy as np

from qlcu import circuit_unitary, cost_report, hartley_demo, hartley_matrix
from qlcu.simulator import basis_state, trace_states

n = 3
N = 1 << n
bundle = hartley_demo(n)
for g in bundle.circuit.gates:
    print(f"{g.kind:17s} targets={g.targets} controls={g.controls} label={g.label}")

# %%
# The middle gate is the 2x2 circulant R on the ancilla.
print(np.round(bundle.circuit.gates[3].unitary, 3))

# %%
# Trace |0>|x>: after R, the ancilla-0 branch already holds A_N|x> / sqrt(2).
x = 5
states = trace_states(bundle.circuit, basis_state(n + 1, x))
after_r = states[4].amplitudes
print("branch 0 error:", np.max(np.abs(after_r[:N] - hartley_matrix(N)[:, x] / np.sqrt(2))))

# %%
# Full unitary: the top-left block is A_N and nothing leaks out of ancilla 0.
w = circuit_unitary(bundle.circuit)
print("top-left block error:", np.max(np.abs(w[:N, :N] - hartley_matrix(N))))
print("leakage:", np.max(np.abs(w[N:, :N])))

# %%
# Cost bound, pricing the Fourier block and its square at c each.
c = 10
report = cost_report(bundle.circuit, {f"F_{N}": c, f"F_{N}^2": c, "R": 1})
print("bound:", report.bound, "=", f"2 + {c} + 2*14*{c} + 1")
for a in report.assumptions:
    print(" -", a)
