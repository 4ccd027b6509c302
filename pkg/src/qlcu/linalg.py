"""Dense complex linear algebra helpers and reference matrices.

Matrices are plain ``numpy`` arrays of dtype ``complex128``. All helpers are
pure; nothing here mutates its inputs.
"""

import numpy as np

from .errors import ParseError

DEFAULT_TOL = 1e-10

SQRT1_2 = 1 / np.sqrt(2)

I2 = np.eye(2, dtype=complex)
SIGMA_X = np.array([[0, 1], [1, 0]], dtype=complex)
SIGMA_Z = np.array([[1, 0], [0, -1]], dtype=complex)
HADAMARD = SQRT1_2 * np.array([[1, 1], [1, -1]], dtype=complex)

__all__ = [
    "DEFAULT_TOL",
    "I2",
    "SIGMA_X",
    "SIGMA_Z",
    "HADAMARD",
    "as_matrix",
    "kron",
    "dagger",
    "max_abs_diff",
    "dft_matrix",
    "is_unitary",
    "unitarity_defect",
    "frobenius_coefficient",
    "num_qubits_for",
    "matrix_to_json",
    "matrix_from_json",
]


def as_matrix(m):
    """Return ``m`` as a 2-D complex array (no copy when already one)."""
    a = np.asarray(m, dtype=complex)
    if a.ndim != 2:
        raise ValueError(f"expected a 2-D matrix, got shape {a.shape}")
    return a


def kron(*factors):
    """Kronecker product of one or more matrices, left factor most significant."""
    if not factors:
        raise ValueError("kron needs at least one factor")
    out = as_matrix(factors[0])
    for f in factors[1:]:
        out = np.kron(out, as_matrix(f))
    return out


def dagger(m):
    return as_matrix(m).conj().T


def max_abs_diff(a, b):
    """Chebyshev distance between two equally shaped arrays."""
    a = np.asarray(a, dtype=complex)
    b = np.asarray(b, dtype=complex)
    if a.shape != b.shape:
        raise ValueError(f"shape mismatch {a.shape} vs {b.shape}")
    if a.size == 0:
        return 0.0
    return float(np.max(np.abs(a - b)))


def dft_matrix(n_dim, normalized=True):
    """Discrete Fourier transform with entry (k, l) = exp(+2*pi*i*k*l/N).

    Parameters
    ----------
    n_dim : int
        Transform length N >= 1.
    normalized : bool
        Divide by sqrt(N) so that the result is unitary.
    """
    if n_dim < 1:
        raise ValueError("n_dim must be >= 1")
    k = np.arange(n_dim)
    # reduce k*l mod N first so large N keeps full phase accuracy
    f = np.exp(2j * np.pi * (np.outer(k, k) % n_dim) / n_dim)
    if normalized:
        f /= np.sqrt(n_dim)
    return f


def unitarity_defect(m):
    """Max-entry norm of ``m^dagger m - I``."""
    m = as_matrix(m)
    if m.shape[0] != m.shape[1]:
        raise ValueError(f"unitarity is only defined for square matrices, got {m.shape}")
    return max_abs_diff(m.conj().T @ m, np.eye(m.shape[0]))


def is_unitary(m, tol=DEFAULT_TOL):
    return unitarity_defect(m) <= tol


def frobenius_coefficient(basis_elem, target):
    """Return ``tr(B^dagger T) / dim``, the coefficient of ``B`` in an orthonormal basis."""
    b = as_matrix(basis_elem)
    t = as_matrix(target)
    if b.shape != t.shape or b.shape[0] != b.shape[1]:
        raise ValueError(f"need equal square shapes, got {b.shape} and {t.shape}")
    return complex(np.vdot(b, t) / b.shape[0])


def num_qubits_for(dim):
    """log2 of a power-of-two dimension."""
    q = int(dim).bit_length() - 1
    if dim < 1 or (1 << q) != dim:
        raise ValueError(f"dimension {dim} is not a power of two")
    return q


def _encode_float(x, hexfloat):
    return float(x).hex() if hexfloat else float(x)


def _decode_float(x, where):
    if isinstance(x, str):
        try:
            return float.fromhex(x)
        except ValueError:
            raise ParseError(f"bad hex float {x!r}", where) from None
    if isinstance(x, (int, float)) and not isinstance(x, bool):
        return float(x)
    raise ParseError(f"expected a number, got {type(x).__name__}", where)


def matrix_to_json(m, hexfloat=False):
    """Encode as ``{rows, cols, entries: [[re, im], ...]}`` in row-major order.

    With ``hexfloat`` the parts are written with ``float.hex`` so that decoding
    is bit-exact.
    """
    m = as_matrix(m)
    rows, cols = m.shape
    entries = [
        [_encode_float(z.real, hexfloat), _encode_float(z.imag, hexfloat)]
        for z in m.ravel()
    ]
    return {"rows": rows, "cols": cols, "entries": entries}


def matrix_from_json(obj, where="matrix"):
    if not isinstance(obj, dict):
        raise ParseError("matrix must be an object", where)
    try:
        rows, cols, entries = obj["rows"], obj["cols"], obj["entries"]
    except KeyError as exc:
        raise ParseError(f"matrix missing field {exc.args[0]!r}", where) from None
    if not (isinstance(rows, int) and isinstance(cols, int)) or rows < 1 or cols < 1:
        raise ParseError("rows/cols must be positive integers", where)
    if not isinstance(entries, list) or len(entries) != rows * cols:
        raise ParseError(f"expected {rows * cols} entries", where)
    out = np.empty(rows * cols, dtype=complex)
    for i, pair in enumerate(entries):
        loc = f"{where}.entries[{i}]"
        if not isinstance(pair, list) or len(pair) != 2:
            raise ParseError("entry must be a [re, im] pair", loc)
        out[i] = complex(_decode_float(pair[0], loc), _decode_float(pair[1], loc))
    return out.reshape(rows, cols)
