import os

import numpy as np
import pytest
from scipy.stats import unitary_group

SEED = int(os.environ.get("QLCU_SEED", "0"))


@pytest.fixture
def rng():
    return np.random.default_rng(SEED)


def haar(dim, rng):
    """Random unitary from scipy, independent of the package's own helpers."""
    return unitary_group.rvs(dim, random_state=rng)


def full_gate_matrix(n, controls, targets, local):
    """Brute-force full-space matrix of a (controlled) gate, entry by entry."""
    dim = 1 << n
    out = np.zeros((dim, dim), dtype=complex)
    for col in range(dim):
        if not all((col >> c) & 1 for c in controls):
            out[col, col] = 1
            continue
        j = sum(((col >> q) & 1) << k for k, q in enumerate(targets))
        for i in range(local.shape[0]):
            row = col
            for k, q in enumerate(targets):
                row = (row & ~(1 << q)) | (((i >> k) & 1) << q)
            out[row, col] += local[i, j]
    return out
