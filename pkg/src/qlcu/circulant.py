"""Group circulants, projective circulants and coefficient solvers."""

from dataclasses import dataclass

import numpy as np

from .errors import NonAbelianError, NotInSpanError
from .groups import FactorSet, FiniteTwoGroup
from .linalg import DEFAULT_TOL, as_matrix, is_unitary, max_abs_diff

__all__ = [
    "CoefficientVector",
    "group_circulant",
    "projective_group_circulant",
    "combine",
    "solve_coefficients",
    "character_table",
    "unitarize_coefficients",
    "check_key_lemma",
    "RANK_RCOND",
]

# relative singular-value cutoff for the rank decision in solve_coefficients
RANK_RCOND = 1e-8


@dataclass(frozen=True, eq=False)
class CoefficientVector:
    """Coefficients ``alpha_g`` ordered by element index."""

    group: FiniteTwoGroup
    alpha: np.ndarray

    def __post_init__(self):
        a = np.array(self.alpha, dtype=complex).ravel()
        if a.shape != (self.group.order,):
            raise ValueError(f"need {self.group.order} coefficients, got {a.size}")
        a.setflags(write=False)
        object.__setattr__(self, "alpha", a)

    def __getitem__(self, address):
        return complex(self.alpha[self.group.index(address)])

    def __len__(self):
        return self.alpha.size

    def __array__(self, dtype=None, copy=None):
        return np.asarray(self.alpha, dtype=dtype)

    def to_json(self):
        return [[float(z.real), float(z.imag)] for z in self.alpha]

    @classmethod
    def from_json(cls, group, data):
        return cls(group, [complex(re, im) for re, im in data])


def _alpha(group, alpha):
    if isinstance(alpha, CoefficientVector):
        return alpha.alpha
    a = np.asarray(alpha, dtype=complex).ravel()
    if a.size != group.order:
        raise ValueError(f"need {group.order} coefficients, got {a.size}")
    return a


def group_circulant(group, alpha):
    """Matrix with entry (g, h) equal to ``alpha[g^-1 h]``."""
    a = _alpha(group, alpha)
    return a[group.table[group.inverse_table]]


def projective_group_circulant(group, fs, alpha):
    """Matrix with entry (g, h) equal to ``alpha[g^-1 h] / omega(g^-1, h)``."""
    a = _alpha(group, alpha)
    inv = group.inverse_table
    table = fs.table if isinstance(fs, FactorSet) else np.asarray(fs, dtype=complex)
    return a[group.table[inv]] / table[inv]


def combine(rep, alpha):
    """``sum_g alpha_g D(g)``."""
    a = _alpha(rep.group, alpha)
    return np.tensordot(a, rep.images, axes=1)


def solve_coefficients(target, rep, tol=DEFAULT_TOL):
    """Minimal-norm coefficients with ``sum_g alpha_g D(g) = target``.

    Raises
    ------
    NotInSpanError
        If the best least-squares fit misses the target by more than ``tol``.
    """
    t = as_matrix(target)
    if t.shape != (rep.block_dim, rep.block_dim):
        raise ValueError(f"target shape {t.shape} does not match block dim {rep.block_dim}")
    cols = rep.images.reshape(rep.group.order, -1).T
    alpha, *_ = np.linalg.lstsq(cols, t.ravel(), rcond=RANK_RCOND)
    residual = max_abs_diff(np.tensordot(alpha, rep.images, axes=1), t)
    if residual > tol:
        raise NotInSpanError(residual, tol)
    return CoefficientVector(rep.group, alpha)


def character_table(group):
    """Characters of an abelian group built from cyclic factors.

    Row ``k`` holds the character with label ``k`` evaluated at every element,
    both written in mixed radix over ``group.cyclic_orders``.
    """
    if group.cyclic_orders is None:
        raise NonAbelianError(f"{group!r} has no known cyclic decomposition")
    idx = np.arange(group.order)
    phase = np.zeros((group.order, group.order))
    stride = group.order
    for n_j in group.cyclic_orders:
        stride //= n_j
        digit = (idx // stride) % n_j
        phase += np.outer(digit, digit) / n_j
    return np.exp(2j * np.pi * (phase % 1.0))


def unitarize_coefficients(target, rep, tol=DEFAULT_TOL):
    """Coefficients reproducing ``target`` whose group circulant is unitary.

    Works for ordinary representations of the abelian constructors. The
    circulant's eigenvalues are the character transforms ``sum_g alpha_g chi(g)``;
    for characters occurring in ``D`` these are forced by the target, every
    other one is set to 1.
    """
    if rep.is_projective:
        raise ValueError("unitarize_coefficients needs an ordinary representation")
    grp = rep.group
    if not grp.is_abelian or grp.cyclic_orders is None:
        raise NonAbelianError(f"unitarization is only implemented for abelian constructors, not {grp!r}")
    alpha = solve_coefficients(target, rep, tol).alpha
    chars = character_table(grp)
    # isotypic check: chi occurs in D iff sum_g conj(chi(g)) D(g) != 0
    proj = np.tensordot(chars.conj(), rep.images, axes=1)
    occurs = np.abs(proj).reshape(grp.order, -1).max(axis=1) > tol
    spectrum = chars @ alpha
    spectrum[~occurs] = 1.0
    new_alpha = chars.conj().T @ spectrum / grp.order
    residual = max_abs_diff(np.tensordot(new_alpha, rep.images, axes=1), as_matrix(target))
    if residual > tol:
        raise NotInSpanError(residual, tol)
    return CoefficientVector(grp, new_alpha)


def check_key_lemma(rep, alpha, tol=DEFAULT_TOL):
    """True iff the (projective, if ``rep`` is) circulant of ``alpha`` is unitary."""
    grp = rep.group
    if rep.is_projective:
        c = projective_group_circulant(grp, rep.factor_set, alpha)
    else:
        c = group_circulant(grp, alpha)
    return is_unitary(c, tol)

