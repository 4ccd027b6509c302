"""Finite 2-groups with binary transversal addressing, factor sets, representations.

An element of a group of order 2**n is addressed by its exponent vector
``(a_1, ..., a_n)`` with respect to an ordered transversal ``(t_1, ..., t_n)``,
i.e. ``g = t_1**a_1 * ... * t_n**a_n``. ``a_1`` is the most significant bit of
the element's index, and that index fixes the order of blocks, circulant rows
and ancilla basis states everywhere in the package.

Internally a group is a Cayley table over indices.
"""

from dataclasses import dataclass, field

import numpy as np

from .errors import PhaseRecoveryError
from .linalg import DEFAULT_TOL, as_matrix, max_abs_diff, unitarity_defect

__all__ = [
    "FiniteTwoGroup",
    "Transversal",
    "FactorSet",
    "Representation",
    "ValidationReport",
    "make_cyclic_group",
    "make_elementary_abelian",
    "make_direct_product",
    "group_from_table",
    "address_index",
    "index_to_address",
    "validate_factor_set",
    "validate_representation",
    "induced_factor_set",
    "literal_products",
]


def address_index(a):
    """Integer index of an address, ``a_1`` most significant."""
    idx = 0
    for bit in a:
        if bit not in (0, 1):
            raise ValueError(f"address bits must be 0/1, got {a!r}")
        idx = (idx << 1) | int(bit)
    return idx


def index_to_address(index, n):
    if not 0 <= index < (1 << n):
        raise ValueError(f"index {index} out of range for n={n}")
    return tuple((index >> (n - 1 - j)) & 1 for j in range(n))


@dataclass(frozen=True, eq=False)
class FiniteTwoGroup:
    """Group of order ``2**n_generators`` given by its multiplication table on indices.

    ``cyclic_orders`` is set for the abelian constructors: the group is then
    the direct product of cyclic groups of these orders, with the index written
    in mixed radix (first factor most significant).
    """

    n_generators: int
    table: np.ndarray
    kind: str = "custom"
    cyclic_orders: tuple = None
    name: str = ""
    inverse_table: np.ndarray = field(init=False, repr=False)

    def __post_init__(self):
        n = self.n_generators
        if n < 1:
            raise ValueError("a 2-group needs at least one generator")
        order = 1 << n
        table = np.array(self.table, dtype=np.int64)
        if table.shape != (order, order):
            raise ValueError(f"table must be {order}x{order}, got {table.shape}")
        if table.min() < 0 or table.max() >= order:
            raise ValueError("table entries out of range")
        if not (np.array_equal(table[0], np.arange(order)) and np.array_equal(table[:, 0], np.arange(order))):
            raise ValueError("index 0 must be the identity element")
        inv = np.argmax(table == 0, axis=1)
        if not np.all(table[np.arange(order), inv] == 0):
            raise ValueError("table does not define inverses")
        table.setflags(write=False)
        inv.setflags(write=False)
        object.__setattr__(self, "table", table)
        object.__setattr__(self, "inverse_table", inv)

    @property
    def order(self):
        return 1 << self.n_generators

    @property
    def identity(self):
        return (0,) * self.n_generators

    @property
    def is_abelian(self):
        return bool(np.array_equal(self.table, self.table.T))

    def addresses(self):
        """All addresses in index order."""
        return [index_to_address(i, self.n_generators) for i in range(self.order)]

    def index(self, a):
        if len(a) != self.n_generators:
            raise ValueError(f"address {a!r} has wrong length for n={self.n_generators}")
        return address_index(a)

    def address(self, index):
        return index_to_address(index, self.n_generators)

    def multiply(self, a, b):
        return self.address(int(self.table[self.index(a), self.index(b)]))

    def invert(self, a):
        return self.address(int(self.inverse_table[self.index(a)]))

    def __repr__(self):
        label = self.name or self.kind
        return f"FiniteTwoGroup({label}, order={self.order})"


@dataclass(frozen=True)
class Transversal:
    """Ordered generators ``t_1, ..., t_n``, identified with the unit addresses."""

    group: FiniteTwoGroup

    @property
    def generators(self):
        n = self.group.n_generators
        return tuple(tuple(int(j == i) for j in range(n)) for i in range(n))

    def product(self, a):
        """Index of ``t_1**a_1 * ... * t_n**a_n`` computed with the group law."""
        g = 0
        for bit, t in zip(a, self.generators):
            if bit:
                g = int(self.group.table[g, self.group.index(t)])
        return g

    def check(self):
        """True when every address equals the ordered product of its generators."""
        return all(self.product(a) == i for i, a in enumerate(self.group.addresses()))


def _cyclic_table(order):
    k = np.arange(order)
    return (k[:, None] + k[None, :]) % order


def make_cyclic_group(k):
    """Z/2^k Z with transversal (2^(k-1), ..., 2, 1): the address is the binary expansion."""
    if k < 1:
        raise ValueError("k must be >= 1")
    order = 1 << k
    return FiniteTwoGroup(k, _cyclic_table(order), kind="cyclic", cyclic_orders=(order,), name=f"Z/{order}")


def make_elementary_abelian(k):
    """(Z/2)^k; multiplication is XOR of addresses."""
    if k < 1:
        raise ValueError("k must be >= 1")
    idx = np.arange(1 << k)
    return FiniteTwoGroup(
        k, idx[:, None] ^ idx[None, :], kind="elementary_abelian", cyclic_orders=(2,) * k, name=f"(Z/2)^{k}"
    )


def make_direct_product(*groups):
    """Direct product; the first factor's address bits are the most significant."""
    if not groups:
        raise ValueError("need at least one factor")
    out = groups[0]
    for g in groups[1:]:
        m = g.order
        table = out.table[:, None, :, None] * m + g.table[None, :, None, :]
        table = table.reshape(out.order * m, out.order * m)
        orders = None
        if out.cyclic_orders is not None and g.cyclic_orders is not None:
            orders = out.cyclic_orders + g.cyclic_orders
        out = FiniteTwoGroup(
            out.n_generators + g.n_generators,
            table,
            kind="direct_product",
            cyclic_orders=orders,
            name=f"{out.name or out.kind} x {g.name or g.kind}",
        )
    return out


def group_from_table(table, name="custom", check_transversal=True):
    """Build a group from an index multiplication table of size 2^n.

    The table must be associative and, if ``check_transversal``, compatible with
    binary addressing: index ``i`` equals the ordered product of the elements
    with indices ``2^(n-1), ..., 2, 1`` selected by its bits.
    """
    table = np.asarray(table, dtype=np.int64)
    order = table.shape[0]
    n = order.bit_length() - 1
    if order < 2 or (1 << n) != order:
        raise ValueError(f"only 2-groups are supported; order {order} is not a power of two")
    grp = FiniteTwoGroup(n, table, kind="custom", name=name)
    left = grp.table[grp.table]  # (ab)c as left[a, b, c]
    right = grp.table[:, grp.table]  # a(bc) as right[a, b, c]
    if not np.array_equal(left, right):
        raise ValueError("multiplication table is not associative")
    if check_transversal and not Transversal(grp).check():
        raise ValueError("indices are not binary transversal addresses")
    return grp


@dataclass
class ValidationReport:
    """Result of a law check. ``violations`` holds ``(law, where, residual)`` tuples."""

    violations: list = field(default_factory=list)

    @property
    def valid(self):
        return not self.violations

    def __bool__(self):
        return self.valid

    def add(self, law, where, residual):
        self.violations.append((law, where, float(residual)))

    def to_json(self):
        return {
            "valid": self.valid,
            "violations": [{"law": l, "where": [list(x) for x in w], "residual": r} for l, w, r in self.violations],
        }


@dataclass(frozen=True, eq=False)
class FactorSet:
    """2-cocycle ``omega(g, h)`` stored as a table indexed by element indices."""

    group: FiniteTwoGroup
    table: np.ndarray

    def __post_init__(self):
        t = np.array(self.table, dtype=complex)
        if t.shape != (self.group.order, self.group.order):
            raise ValueError("factor set table has wrong shape")
        t.setflags(write=False)
        object.__setattr__(self, "table", t)

    @classmethod
    def trivial(cls, group):
        return cls(group, np.ones((group.order, group.order), dtype=complex))

    def omega(self, a, b):
        return complex(self.table[self.group.index(a), self.group.index(b)])

    def is_trivial(self, tol=DEFAULT_TOL):
        return max_abs_diff(self.table, np.ones_like(self.table)) <= tol

    def to_json(self):
        return {"table": [[[z.real, z.imag] for z in row] for row in self.table]}


def validate_factor_set(group, fs, tol=DEFAULT_TOL):
    """Check cocycle law, normalization and unit modulus exhaustively."""
    report = ValidationReport()
    t = fs.table
    g = group.table
    addr = group.address
    for i in range(group.order):
        for law, value in (("normalization", t[i, 0]), ("normalization", t[0, i])):
            r = abs(value - 1)
            if r > tol:
                report.add(law, (addr(i),), r)
    mod = np.abs(np.abs(t) - 1)
    for i, j in zip(*np.nonzero(mod > tol)):
        report.add("unit_modulus", (addr(i), addr(j)), mod[i, j])
    # w(x,y) w(xy,z) = w(x,yz) w(y,z) for all triples at once
    x, y, z = np.meshgrid(*(np.arange(group.order),) * 3, indexing="ij")
    lhs = t[x, y] * t[g[x, y], z]
    rhs = t[x, g[y, z]] * t[y, z]
    res = np.abs(lhs - rhs)
    for i, j, k in zip(*np.nonzero(res > tol)):
        report.add("cocycle", (addr(i), addr(j), addr(k)), res[i, j, k])
    return report


@dataclass(frozen=True, eq=False)
class Representation:
    """Map from addresses to unitary blocks, ordinary or projective.

    ``images`` has shape ``(order, d, d)`` in index order. ``factor_set`` of
    ``None`` means the ordinary case (omega = 1). ``labels`` optionally names
    the transversal images, used as gate labels.
    """

    group: FiniteTwoGroup
    images: np.ndarray
    factor_set: FactorSet = None
    labels: tuple = None

    def __post_init__(self):
        imgs = np.array(self.images, dtype=complex)
        if imgs.ndim != 3 or imgs.shape[0] != self.group.order or imgs.shape[1] != imgs.shape[2]:
            raise ValueError(f"images must have shape ({self.group.order}, d, d), got {imgs.shape}")
        d = imgs.shape[1]
        if d & (d - 1):
            raise ValueError(f"block dimension {d} is not a power of two")
        imgs.setflags(write=False)
        object.__setattr__(self, "images", imgs)
        if self.labels is not None and len(self.labels) != self.group.n_generators:
            raise ValueError("need one label per transversal generator")

    @property
    def block_dim(self):
        return self.images.shape[1]

    @property
    def omega(self):
        return self.factor_set if self.factor_set is not None else FactorSet.trivial(self.group)

    @property
    def is_projective(self):
        return self.factor_set is not None and not self.factor_set.is_trivial()

    def image(self, a):
        return self.images[self.group.index(a)]

    def generator_images(self):
        """Images of ``t_1, ..., t_n``."""
        n = self.group.n_generators
        return [self.images[1 << (n - 1 - i)] for i in range(n)]

    def generator_labels(self):
        if self.labels is not None:
            return tuple(self.labels)
        return tuple(f"D(t{i + 1})" for i in range(self.group.n_generators))


def validate_representation(rep, tol=DEFAULT_TOL):
    """Check unitarity, ``D(1) = I`` and ``D(g) D(h) = omega(g, h) D(gh)``."""
    report = ValidationReport()
    grp = rep.group
    imgs = rep.images
    omega = rep.omega.table
    for i, m in enumerate(imgs):
        r = unitarity_defect(m)
        if r > tol:
            report.add("unitary", (grp.address(i),), r)
    r = max_abs_diff(imgs[0], np.eye(rep.block_dim))
    if r > tol:
        report.add("identity", (grp.identity,), r)
    prods = np.einsum("iab,jbc->ijac", imgs, imgs)
    expected = omega[:, :, None, None] * imgs[grp.table]
    res = np.abs(prods - expected).max(axis=(2, 3))
    for i, j in zip(*np.nonzero(res > tol)):
        report.add("multiplication", (grp.address(i), grp.address(j)), res[i, j])
    return report


def _phase_between(p, q, tol):
    """Unit scalar ``phi`` with ``p = phi * q``; pivot is the largest entry of ``q``."""
    pivot = np.unravel_index(np.argmax(np.abs(q)), q.shape)
    if abs(q[pivot]) <= tol:
        raise PhaseRecoveryError("reference block is zero")
    phi = p[pivot] / q[pivot]
    if abs(abs(phi) - 1) > tol:
        raise PhaseRecoveryError(f"relating scalar has modulus {abs(phi):.6g}, not 1")
    phi /= abs(phi)
    r = max_abs_diff(p, phi * q)
    if r > tol:
        raise PhaseRecoveryError(f"product is not a scalar multiple of the block (residual {r:.3e})")
    return phi


def _as_blocks(group, blocks):
    if isinstance(blocks, Representation):
        return blocks.images
    if isinstance(blocks, dict):
        return np.array([as_matrix(blocks[a]) for a in group.addresses()])
    if callable(blocks):
        return np.array([as_matrix(blocks(a)) for a in group.addresses()])
    return np.asarray(blocks, dtype=complex)


def induced_factor_set(group, blocks, tol=DEFAULT_TOL):
    """Recover the factor set of blocks forming a projective representation.

    ``blocks`` may be an index-ordered array, a dict keyed by address, a
    callable on addresses, or a :class:`Representation`.

    Raises
    ------
    PhaseRecoveryError
        If some product ``blocks(g) blocks(h)`` is not a unit multiple of ``blocks(gh)``.
    """
    imgs = _as_blocks(group, blocks)
    d = imgs.shape[1]
    if max_abs_diff(imgs[0], np.eye(d)) > tol:
        raise PhaseRecoveryError("identity address must map to the identity matrix")
    t = np.empty((group.order, group.order), dtype=complex)
    for i in range(group.order):
        for j in range(group.order):
            try:
                t[i, j] = _phase_between(imgs[i] @ imgs[j], imgs[group.table[i, j]], tol)
            except PhaseRecoveryError as exc:
                raise PhaseRecoveryError(f"pair {group.address(i)}, {group.address(j)}: {exc}") from None
    return FactorSet(group, t)


def literal_products(group, generator_images):
    """Blocks ``D(t_1)**a_1 @ ... @ D(t_n)**a_n`` for every address, in index order."""
    gens = [as_matrix(m) for m in generator_images]
    if len(gens) != group.n_generators:
        raise ValueError("need one image per transversal generator")
    d = gens[0].shape[0]
    out = np.empty((group.order, d, d), dtype=complex)
    for i, a in enumerate(group.addresses()):
        m = np.eye(d, dtype=complex)
        for bit, gm in zip(a, gens):
            if bit:
                m = m @ gm
        out[i] = m
    return out

